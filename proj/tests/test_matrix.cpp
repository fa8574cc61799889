#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewbi/matrix.hpp"

using namespace skewbi;

TEST_CASE("kernel basis") {
  Matrix m(2, 2, {1, 1, 1, 1});
  Matrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  // Spans (1, -1) up to scaling.
  CHECK(k.at(0, 0) == -k.at(1, 0));
  CHECK(k.at(0, 0) != 0);

  CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);
  CHECK(kernel_basis(Matrix::zero(2, 2)).cols() == 2);
}

TEST_CASE("rank plus nullity equals column count") {
  Matrix m(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1});
  CHECK(rank(m) + kernel_basis(m).cols() == m.cols());
  CHECK(rank(m) == 2);
}

TEST_CASE("eigenspace") {
  Matrix d(2, 2, {1, 0, 0, -1});
  Matrix e1 = eigenspace(d, 1);
  REQUIRE(e1.cols() == 1);
  CHECK(e1.at(0, 0) != 0);
  CHECK(e1.at(1, 0) == 0);
  CHECK(eigenspace(d, 5).cols() == 0);
}

TEST_CASE("solve and inverse") {
  Matrix a(2, 2, {2, 1, 1, 1});
  Matrix b(2, 1, {3, 2});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  auto ai = inverse(a);
  REQUIRE(ai.has_value());
  CHECK(a * *ai == Matrix::identity(2));

  Matrix s(2, 2, {1, 1, 1, 1});
  CHECK(!inverse(s).has_value());
  CHECK(!solve(s, Matrix(2, 1, {1, 0})).has_value());
}

TEST_CASE("characteristic polynomial and rational roots") {
  Matrix d(3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 2;
  auto coeffs = characteristic_polynomial(d);
  // (x-1)(x-2)^2 = x^3 - 5x^2 + 8x - 4
  REQUIRE(coeffs.size() == 4);
  CHECK(coeffs[3] == 1);
  CHECK(coeffs[2] == -5);
  CHECK(coeffs[1] == 8);
  CHECK(coeffs[0] == -4);

  auto roots = rational_roots(coeffs);
  REQUIRE(roots.has_value());
  REQUIRE(roots->roots.size() == 2);
  CHECK(roots->roots[0] == std::pair<Rational, std::size_t>{1, 1});
  CHECK(roots->roots[1] == std::pair<Rational, std::size_t>{2, 2});

  // x^2 + 1 has no rational roots.
  CHECK(!rational_roots({1, 0, 1}).has_value());
  // Half-integer roots: (x - 1/2)(x + 3/2) = x^2 + x - 3/4.
  auto half = rational_roots({Rational(-3, 4), 1, 1});
  REQUIRE(half.has_value());
  CHECK(half->roots.size() == 2);
}

TEST_CASE("path order") {
  // Single vertex.
  auto one = path_order({{false}});
  REQUIRE(one.has_value());
  CHECK(*one == std::vector<std::size_t>{0});

  // Already tridiagonal 0-1-2.
  std::vector<std::vector<bool>> tri = {
      {false, true, false}, {true, false, true}, {false, true, false}};
  auto t = path_order(tri);
  REQUIRE(t.has_value());
  CHECK(((*t)[1] == 1));  // middle vertex stays in the middle

  // Path 0-2-1 in scrambled labels.
  std::vector<std::vector<bool>> scram = {
      {false, false, true}, {false, false, true}, {true, true, false}};
  auto s = path_order(scram);
  REQUIRE(s.has_value());
  CHECK(((*s)[1] == 2));

  // Star on 4 vertices: center has degree 3.
  std::vector<std::vector<bool>> star(4, std::vector<bool>(4, false));
  for (int i = 1; i < 4; ++i) star[0][i] = star[i][0] = true;
  CHECK(!path_order(star).has_value());

  // Disconnected pair of edges.
  std::vector<std::vector<bool>> disc(4, std::vector<bool>(4, false));
  disc[0][1] = disc[1][0] = disc[2][3] = disc[3][2] = true;
  CHECK(!path_order(disc).has_value());
}

TEST_CASE("generated algebra dimension") {
  Matrix e12(2, 2, {0, 1, 0, 0});
  Matrix e21(2, 2, {0, 0, 1, 0});
  // e12 and e21 generate the full 2x2 matrix algebra.
  CHECK(generated_algebra_dimension({e12, e21}) == 4);
  // A single diagonal matrix with distinct entries generates the diagonals.
  Matrix d(2, 2, {1, 0, 0, 2});
  CHECK(generated_algebra_dimension({d}) == 2);
  // Scalars alone give the one-dimensional algebra.
  CHECK(generated_algebra_dimension({Matrix::identity(3)}) == 1);
}

TEST_CASE("kron and commutators") {
  Matrix a(2, 2, {1, 2, 3, 4});
  Matrix b(2, 2, {0, 1, 1, 0});
  Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k.at(0, 1) == 1);
  CHECK(k.at(2, 3) == 4);
  CHECK(k.at(3, 2) == 4);
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(anticommutator(a, b) == a * b + b * a);
  CHECK(kron(a, Matrix::identity(2)) * kron(Matrix::identity(2), b) ==
        kron(a, b));
}
