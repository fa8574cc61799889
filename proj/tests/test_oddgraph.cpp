#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "skewbi/oddgraph.hpp"

using namespace skewbi;

TEST_CASE("odd graph construction") {
  auto k3 = build_odd_graph(1);
  CHECK(k3.vertices.size() == 3);
  // O_1 is the complete graph on three singletons.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(k3.A.at(i, j) == (i == j ? 0 : 1));

  auto petersen = build_odd_graph(2);
  CHECK(petersen.vertices.size() == 10);
  CHECK(petersen.A == petersen.A.transpose());
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(petersen.A.at(i, i) == 0);
    Rational deg = 0;
    for (std::size_t j = 0; j < 10; ++j) deg += petersen.A.at(i, j);
    CHECK(deg == 3);  // valency d + 1
  }
  // Vertices are in increasing bitmask order and have popcount d.
  for (std::size_t i = 0; i + 1 < 10; ++i)
    CHECK(petersen.vertices[i] < petersen.vertices[i + 1]);

  CHECK(build_odd_graph(3).vertices.size() == 35);

  CHECK_THROWS_AS(build_odd_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(build_odd_graph(6), std::invalid_argument);
}

TEST_CASE("Petersen spectrum") {
  auto g = build_odd_graph(2);
  auto roots = rational_roots(characteristic_polynomial(g.A));
  REQUIRE(roots.has_value());
  std::map<Rational, std::size_t> spec(roots->roots.begin(),
                                       roots->roots.end());
  CHECK(spec == std::map<Rational, std::size_t>{{-2, 4}, {1, 5}, {3, 1}});
}

TEST_CASE("dual adjacency") {
  auto g = build_odd_graph(2);
  Matrix as = dual_adjacency(g, 0);
  // Diagonal; 2d at the base vertex itself.
  CHECK(as.at(0, 0) == 4);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      if (i != j) CHECK(as.at(i, j) == 0);
  // Entries are 2d - (2d+1)/(d+1) |x0 symdiff x|: for d = 2 the values are
  // 4, 2/3, -8/3 as the symmetric difference runs over 0, 2, 4.
  std::set<Rational> values;
  for (std::size_t i = 0; i < 10; ++i) values.insert(as.at(i, i));
  CHECK(values == std::set<Rational>{4, Rational(2, 3), Rational(-8, 3)});

  CHECK_THROWS_AS(dual_adjacency(g, 10), std::out_of_range);
}

TEST_CASE("Terwilliger images satisfy the relations") {
  for (unsigned d : {1u, 2u, 3u}) {
    auto g = build_odd_graph(d);
    auto t = terwilliger_images(g, 0);
    CHECK(t.X == g.A);
    CHECK(verify_homomorphism(t).all_pass());
  }

  // Y spectrum for the Petersen graph.
  auto t2 = terwilliger_images(build_odd_graph(2), 0);
  auto roots = rational_roots(characteristic_polynomial(t2.Y));
  REQUIRE(roots.has_value());
  std::set<Rational> ys;
  for (const auto& [r, m] : roots->roots) ys.insert(r);
  CHECK(ys == std::set<Rational>{Rational(5, 2), Rational(1, 2), Rational(-3, 2)});

  // Negative control: perturbing Y breaks the relations.
  auto broken = t2;
  broken.Y.at(0, 0) += 1;
  CHECK(!verify_homomorphism(broken).all_pass());
}

TEST_CASE("combinatorial operators agree with the weight-1 restriction") {
  for (unsigned d : {1u, 2u, 3u}) {
    auto report = match_with_v1(d, 0);
    CHECK(report.v1_dim == std::size_t(binomial(2 * d + 1, d)));
    CHECK(report.all_pass());
  }
  // Base-vertex choice does not matter.
  CHECK(match_with_v1(2, 7).all_pass());
}

TEST_CASE("standard module decomposition, Petersen") {
  auto report = decompose_standard_module(2, 0);
  CHECK(report.dimension_ok);
  CHECK(report.total_dim == 10);
  CHECK(report.spectrum_partition_ok);

  std::multiset<std::pair<std::size_t, unsigned>> shape;  // (dim, mult)
  for (const auto& s : report.summands) {
    shape.insert({s.dim, s.multiplicity});
    CHECK(s.identification_consistent);
    CHECK(s.leonard);
  }
  CHECK(shape == std::multiset<std::pair<std::size_t, unsigned>>{
                     {1, 1}, {1, 2}, {2, 2}, {3, 1}});

  // The unique 3-dimensional summand has X spectrum {1, -2, 3}.
  for (const auto& s : report.summands)
    if (s.dim == 3) {
      std::set<Rational> xs;
      for (const auto& [r, m] : s.spectrum_x) xs.insert(r);
      CHECK(xs == std::set<Rational>{1, -2, 3});
    }

  // Adjacency spectrum recovered from the summand eigenvalues.
  std::map<Rational, std::size_t> spec(report.adjacency_spectrum.begin(),
                                       report.adjacency_spectrum.end());
  CHECK(spec == std::map<Rational, std::size_t>{{-2, 4}, {1, 5}, {3, 1}});
}

TEST_CASE("decomposition is base-vertex independent") {
  auto r0 = decompose_standard_module(2, 0);
  auto r5 = decompose_standard_module(2, 5);
  REQUIRE(r0.summands.size() == r5.summands.size());
  for (std::size_t i = 0; i < r0.summands.size(); ++i) {
    CHECK(r0.summands[i].predicted == r5.summands[i].predicted);
    CHECK(r0.summands[i].multiplicity == r5.summands[i].multiplicity);
    CHECK(r0.summands[i].spectrum_x == r5.summands[i].spectrum_x);
  }
}

TEST_CASE("all summands certified for d up to 3") {
  for (unsigned d : {1u, 3u}) {
    auto report = decompose_standard_module(d, 0);
    CHECK(report.dimension_ok);
    CHECK(report.spectrum_partition_ok);
    for (const auto& s : report.summands) {
      CHECK(s.identification_consistent);
      CHECK(s.leonard);
      CHECK(s.dim == std::min(s.left.n, s.right.n) + 1);
    }
  }
}

TEST_CASE("the images generate the full commutant-free algebra") {
  // Burnside over the decomposition: the algebra generated by X and Y has
  // dimension equal to the sum of dim^2 over isomorphism classes. For the
  // Petersen graph that is 9 + 4 + 1 + 1 = 15.
  auto t = terwilliger_images(build_odd_graph(2), 0);
  CHECK(generated_algebra_dimension({t.X, t.Y}) == 15);
}

TEST_CASE("spectrum from candidates") {
  Matrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = -2;
  auto spec = spectrum_from_candidates(m, {1, -2});
  REQUIRE(spec.size() == 2);
  std::map<Rational, std::size_t> got(spec.begin(), spec.end());
  CHECK(got == std::map<Rational, std::size_t>{{1, 2}, {-2, 1}});
  // Wrong candidate list fails to annihilate.
  CHECK(spectrum_from_candidates(m, {1, 5}).empty());
}
