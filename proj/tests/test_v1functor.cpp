#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "skewbi/v1functor.hpp"

using namespace skewbi;

namespace {

TensorRepresentation tensor_irr(unsigned m, int dm, unsigned n, int dn) {
  return tensor_rep(build_irreducible({m, dm}), build_irreducible({n, dn}));
}

}  // namespace

TEST_CASE("weight subspaces") {
  // L_0 x L_0 has only weight 0.
  CHECK(weight_subspace(tensor_irr(0, +1, 0, +1), 1).dim() == 0);
  CHECK(weight_subspace(tensor_irr(0, +1, 0, +1), 0).dim() == 1);

  // L_2 x L_3: weight of v_i x v_j is (2-2i)+(3-2j) = 5-2(i+j); theta = 1
  // means i+j = 2, three basis pairs.
  auto t = tensor_irr(2, +1, 3, +1);
  auto v1 = weight_subspace(t, 1);
  CHECK(v1.dim() == 3);
  // Every basis column is supported on the coordinates with i+j = 2.
  for (std::size_t c = 0; c < v1.basis.cols(); ++c)
    for (std::size_t r = 0; r < v1.basis.rows(); ++r)
      if (v1.basis.at(r, c) != 0) CHECK(r / 4 + r % 4 == 2);

  // L_1 x L_2 at theta = 1: i + j = 1, two pairs.
  CHECK(weight_subspace(tensor_irr(1, +1, 2, +1), 1).dim() == 2);

  // Dimensions over the full ladder add up to (m+1)(n+1).
  std::size_t total = 0;
  for (long theta = -5; theta <= 5; ++theta)
    total += weight_subspace(t, theta).dim();
  CHECK(total == 12);
}

TEST_CASE("restricted triple on V(1)") {
  auto v1 = bi_on_v1(tensor_irr(2, +1, 3, +1));
  REQUIRE(v1.basis.dim() == 3);
  auto ce = central_elements(v1.triple);
  CHECK(ce.kappa.is_zero());
  CHECK(ce.lambda.is_zero());
  // mu = (m(m+2) - n(n+2))/2 = (8 - 15)/2.
  CHECK(ce.mu == Matrix::identity(3) * Rational(-7, 2));
  // Casimir scalar m(m+2)/2 + n(n+2)/2 + 3/4 = 4 + 15/2 + 3/4.
  CHECK(bi_casimir(v1.triple) == Matrix::identity(3) * Rational(49, 4));
  REQUIRE(v1.identification.has_value());
  CHECK(identification_consistent(identify_v1(2, 3, +1, +1, FactorOrder::AsGiven),
                                  *v1.identification));

  // Even total weight: V(1) is empty and the triple is 0 x 0.
  auto empty = bi_on_v1(tensor_irr(1, +1, 3, -1));
  CHECK(empty.basis.dim() == 0);
  CHECK(!empty.identification.has_value());
}

TEST_CASE("explicit w basis") {
  auto w = explicit_w_basis(2, 3);
  REQUIRE(w.X.rows() == 3);
  // Y is diagonal with eigenvalues 2i - m - 1/2.
  std::set<Rational> ys;
  for (std::size_t i = 0; i < 3; ++i) {
    ys.insert(w.Y.at(i, i));
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(w.Y.at(i, j) == 0);
  }
  CHECK(ys == std::set<Rational>{Rational(-5, 2), Rational(-1, 2), Rational(3, 2)});

  // X w_0 = w_0 for (m,n) = (0,1).
  auto w01 = explicit_w_basis(0, 1);
  CHECK(w01.X == Matrix::identity(1));

  // trace X = (m+1)/2 for odd m: (1,2) gives 1.
  CHECK(explicit_w_basis(1, 2).X.trace() == 1);
  // trace X = (n+1)/2 for even m: (2,3) gives 2.
  CHECK(w.X.trace() == 2);

  // The w columns really implement the restricted operators: the base
  // change from the computed V(1) basis conjugates X and Y onto the
  // closed-form matrices.
  auto t = tensor_irr(2, +1, 3, +1);
  auto v1 = bi_on_v1(t);
  auto change = solve(v1.basis.basis, w.basis);
  REQUIRE(change.has_value());
  CHECK(v1.triple.X * *change == *change * w.X);
  CHECK(v1.triple.Y * *change == *change * w.Y);

  CHECK_THROWS_AS(explicit_w_basis(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(explicit_w_basis(3, 2), std::invalid_argument);
}

TEST_CASE("closed-form identification") {
  // Base cases.
  auto even_base = identify_v1(2, 3, +1, +1, FactorOrder::AsGiven);
  CHECK(even_base == BIModuleParams{Parity::Odd, 2, 2, Rational(-3, 2), -2,
                                    TwistPair{}});
  auto odd_base = identify_v1(1, 2, +1, +1, FactorOrder::AsGiven);
  CHECK(odd_base == BIModuleParams{Parity::Even, 1, Rational(3, 2), 1,
                                   Rational(3, 2), TwistPair{-1, +1}});

  // Swapping the factors flips two parameter signs in the odd-parity family.
  auto swapped = identify_v1(2, 3, +1, +1, FactorOrder::Swapped);
  CHECK(swapped == BIModuleParams{Parity::Odd, 2, 2, Rational(3, 2), 2,
                                  TwistPair{}});

  CHECK_THROWS_AS(identify_v1(2, 2, +1, +1, FactorOrder::AsGiven),
                  std::invalid_argument);
  CHECK_THROWS_AS(identify_v1(3, 2, +1, +1, FactorOrder::AsGiven),
                  std::invalid_argument);
  CHECK_THROWS_AS(identify_v1(2, 3, 2, +1, FactorOrder::AsGiven),
                  std::invalid_argument);
}

TEST_CASE("identification matches the matrices in low rank") {
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = m; n <= 5; ++n) {
      if ((m + n) % 2 == 0) continue;
      for (int dm : {+1, -1})
        for (int dn : {+1, -1}) {
          auto as_given = bi_on_v1(tensor_irr(m, dm, n, dn));
          REQUIRE(as_given.identification.has_value());
          CHECK(identification_consistent(
              identify_v1(m, n, dm, dn, FactorOrder::AsGiven),
              *as_given.identification));

          auto swapped = bi_on_v1(tensor_irr(n, dm, m, dn));
          REQUIRE(swapped.identification.has_value());
          CHECK(identification_consistent(
              identify_v1(m, n, dm, dn, FactorOrder::Swapped),
              *swapped.identification));
        }
    }
}

TEST_CASE("swapped factors reverse the Y spectrum") {
  auto w = bi_on_v1(tensor_irr(3, +1, 2, +1));
  auto roots = rational_roots(characteristic_polynomial(w.triple.Y));
  REQUIRE(roots.has_value());
  std::set<Rational> ys;
  for (const auto& [r, m] : roots->roots) ys.insert(r);
  CHECK(ys == std::set<Rational>{Rational(5, 2), Rational(1, 2), Rational(-3, 2)});
}
