#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "skewbi/sl2modules.hpp"

using namespace skewbi;

TEST_CASE("irreducible module matrices") {
  auto l1 = build_irreducible({1, +1});
  CHECK(l1.H == Matrix(2, 2, {1, 0, 0, -1}));
  CHECK(l1.E == Matrix(2, 2, {0, 1, 0, 0}));
  CHECK(l1.F == Matrix(2, 2, {0, 0, 1, 0}));
  CHECK(l1.rho == Matrix(2, 2, {0, 1, 1, 0}));

  auto l0m = build_irreducible({0, -1});
  CHECK(l0m.dim == 1);
  CHECK(l0m.rho == Matrix(1, 1, {-1}));
  CHECK(l0m.E.is_zero());

  for (unsigned n = 0; n <= 12; ++n)
    for (int s : {+1, -1})
      CHECK(verify_defining_relations(build_irreducible({n, s})).all_pass());
}

TEST_CASE("a wrong rho matrix is caught") {
  auto rep = build_irreducible({2, +1});
  rep.rho = Matrix::identity(3);
  auto report = verify_defining_relations(rep);
  CHECK(!report.all_pass());
  bool anticomm_failed = false;
  for (const auto& e : report.entries)
    if (!e.holds && e.relation.find("H") != std::string::npos)
      anticomm_failed = true;
  CHECK(anticomm_failed);
}

TEST_CASE("evaluation homomorphism") {
  auto l3 = build_irreducible({3, +1});
  CHECK(act(l3, RingElement(Rational(1))) == Matrix::identity(4));
  // Casimir acts as n(n+2)/2.
  CHECK(act(l3, casimir()) == Matrix::identity(4) * Rational(15, 2));
  // Evaluation respects products.
  auto x = parse_ring_element("E*F*rho + H");
  auto y = parse_ring_element("rho*E - 2*H^2");
  CHECK(act(l3, multiply(x, y)) == act(l3, x) * act(l3, y));
}

TEST_CASE("tensor representation") {
  auto t = tensor_rep(build_irreducible({2, +1}), build_irreducible({3, -1}));
  CHECK(t.dim() == 12);
  CHECK(t.apply_delta(RingElement::generator(Gen::H)) ==
        kron(t.left.H, Matrix::identity(4)) +
            kron(Matrix::identity(3), t.right.H));
  // Delta(rho) is the product of the factor rho actions.
  CHECK(t.apply_delta(RingElement::generator(Gen::Rho)) ==
        kron(t.left.rho, t.right.rho));
  // apply_delta is multiplicative.
  auto x = parse_ring_element("E*rho");
  auto y = parse_ring_element("F*H");
  CHECK(t.apply_delta(multiply(x, y)) ==
        t.apply_delta(x) * t.apply_delta(y));
}

TEST_CASE("Clebsch-Gordan embedding") {
  // m = n = 1, p = 1: the singlet v0 x v1 - v1 x v0.
  Matrix f = cg_embedding(1, 1, 1);
  REQUIRE(f.rows() == 4);
  REQUIRE(f.cols() == 1);
  CHECK(f.at(1, 0) == -f.at(2, 0));
  CHECK(f.at(1, 0) != 0);
  CHECK(f.at(0, 0) == 0);
  CHECK(f.at(3, 0) == 0);

  // p = 0 sends the top vector to v0 x v0.
  Matrix g = cg_embedding(2, 3, 0);
  CHECK(g.at(0, 0) == 1);
  for (std::size_t r = 1; r < g.rows(); ++r) CHECK(g.at(r, 0) == 0);

  // Intertwines Delta(u) with the action on L_{m+n-2p}, for (m,n,p)=(2,3,1).
  Matrix e = cg_embedding(2, 3, 1);
  auto t = tensor_rep(build_irreducible({2, +1}), build_irreducible({3, +1}));
  auto small = build_irreducible({3, +1});
  for (Gen ggen : {Gen::E, Gen::F, Gen::H})
    CHECK(t.apply_delta(RingElement::generator(ggen)) * e ==
          e * act(small, RingElement::generator(ggen)));

  CHECK_THROWS_AS(cg_embedding(2, 3, 4), std::invalid_argument);
}

TEST_CASE("Clebsch-Gordan decomposition") {
  auto labels = [](const std::vector<CGSummand>& s) {
    std::vector<IrrLabel> out;
    for (const auto& c : s) out.push_back(c.label);
    return out;
  };

  auto d1 = cg_decompose({1, +1}, {1, +1});
  CHECK(labels(d1) == std::vector<IrrLabel>{{2, +1}, {0, -1}});

  auto d0 = cg_decompose({0, -1}, {0, -1});
  CHECK(labels(d0) == std::vector<IrrLabel>{{0, +1}});

  auto d23 = cg_decompose({2, +1}, {3, +1});
  CHECK(labels(d23) == std::vector<IrrLabel>{{5, +1}, {3, -1}, {1, +1}});

  // Dimensions add up and the summand images are jointly independent.
  std::size_t total = 0;
  Matrix all;
  for (const auto& s : d23) {
    total += s.label.n + 1;
    all = all.rows() == 0 ? s.embedding : all.hcat(s.embedding);
  }
  CHECK(total == 12);
  CHECK(rank(all) == 12);
}

TEST_CASE("powerset module") {
  auto p1 = powerset_rep(1);
  auto l1 = build_irreducible({1, +1});
  // On one point the subset module is exactly L_1^+ in the basis {empty, full}.
  CHECK(p1.E == l1.E);
  CHECK(p1.F == l1.F);
  CHECK(p1.H == l1.H);
  CHECK(p1.rho == l1.rho);

  auto p3 = powerset_rep(3);
  CHECK(p3.dim == 8);
  CHECK(verify_defining_relations(p3).all_pass());
  // {0,1} in a 3-set (bitmask 3, index 3) has weight 3 - 2*2 = -1.
  CHECK(p3.H.at(3, 3) == -1);
  // rho sends {0} (index 1) to {1,2} (index 6).
  CHECK(p3.rho.at(6, 1) == 1);

  CHECK_THROWS_AS(powerset_rep(17), std::invalid_argument);
}

TEST_CASE("powerset decomposition") {
  CHECK(powerset_decompose(0) ==
        std::vector<std::pair<IrrLabel, unsigned>>{{{0, +1}, 1}});
  CHECK(powerset_decompose(3) ==
        std::vector<std::pair<IrrLabel, unsigned>>{{{3, +1}, 1}, {{1, -1}, 2}});
  CHECK(powerset_decompose(5) ==
        std::vector<std::pair<IrrLabel, unsigned>>{
            {{5, +1}, 1}, {{3, -1}, 4}, {{1, +1}, 5}});
  // Total dimension check for |Omega| = 6.
  std::size_t total = 0;
  for (const auto& [label, mult] : powerset_decompose(6))
    total += mult * (label.n + 1);
  CHECK(total == 64);
}

TEST_CASE("isotypic components match the multiplicity formula") {
  for (unsigned omega = 0; omega <= 6; ++omega) {
    std::map<IrrLabel, unsigned> formula;
    for (const auto& [label, mult] : powerset_decompose(omega))
      formula[label] = mult;
    auto computed = isotypic_components(powerset_rep(omega));
    REQUIRE(computed.size() == formula.size());
    for (const auto& comp : computed) {
      REQUIRE(formula.count(comp.label) == 1);
      CHECK(comp.multiplicity == formula[comp.label]);
      CHECK(rank(comp.highest_weight_vectors) == formula[comp.label]);
    }
  }
}

TEST_CASE("iota intertwiner") {
  // x0 = empty: the identity up to the trivial right factor.
  Matrix id = iota_intertwiner(3, 0);
  CHECK(id == Matrix::identity(8));

  // Permutation matrix: one 1 per row and column.
  Matrix p = iota_intertwiner(4, 0b0101);
  REQUIRE(p.rows() == 16);
  for (std::size_t r = 0; r < 16; ++r) {
    Rational row_sum = 0, col_sum = 0;
    for (std::size_t c = 0; c < 16; ++c) {
      row_sum += p.at(r, c);
      col_sum += p.at(c, r);
      CHECK((p.at(r, c) == 0 || p.at(r, c) == 1));
    }
    CHECK(row_sum == 1);
    CHECK(col_sum == 1);
  }

  // Intertwines the subset action with the tensor action for |Omega| = 3,
  // x0 = {0}.
  Matrix iota = iota_intertwiner(3, 0b001);
  auto amb = powerset_rep(3);
  auto t = tensor_rep(powerset_rep(2), powerset_rep(1));
  for (Gen g : {Gen::E, Gen::F, Gen::H, Gen::Rho})
    CHECK(t.apply_delta(RingElement::generator(g)) * iota ==
          iota * act(amb, RingElement::generator(g)));
}

TEST_CASE("lowering basis reconstructs the standard matrices") {
  auto rep = powerset_rep(3);
  auto iso = isotypic_components(rep);
  // Highest-weight vector of the L_3^+ component.
  Matrix v;
  for (const auto& comp : iso)
    if (comp.label == IrrLabel{3, +1}) v = comp.highest_weight_vectors.column(0);
  REQUIRE(v.rows() == 8);
  Matrix basis = lowering_basis(rep, v, 3);
  auto model = build_irreducible({3, +1});
  for (Gen g : {Gen::E, Gen::F, Gen::H, Gen::Rho}) {
    auto u = RingElement::generator(g);
    CHECK(act(rep, u) * basis == basis * act(model, u));
  }
}
