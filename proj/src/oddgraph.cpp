#include "skewbi/oddgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace skewbi {

OddGraph build_odd_graph(unsigned d) {
  if (d < 1 || d > 5)
    throw std::invalid_argument("build_odd_graph: d must be in 1..5");
  OddGraph g;
  g.d = d;
  const std::uint32_t limit = 1u << (2 * d + 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (std::popcount(mask) == static_cast<int>(d)) g.vertices.push_back(mask);
  const std::size_t n = g.vertices.size();
  g.A = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (g.vertices[i] & g.vertices[j]) == 0) g.A.at(i, j) = 1;
  return g;
}

Matrix dual_adjacency(const OddGraph& g, std::size_t x0) {
  const std::uint32_t base = g.vertices.at(x0);
  const std::size_t n = g.vertices.size();
  Matrix astar(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int symdiff = std::popcount(base ^ g.vertices[i]);
    astar.at(i, i) = Rational(2 * g.d) -
                     Rational(2 * g.d + 1, g.d + 1) * symdiff;
  }
  return astar;
}

BITriple terwilliger_images(const OddGraph& g, std::size_t x0) {
  const Matrix astar = dual_adjacency(g, x0);
  const std::size_t n = g.vertices.size();
  const Rational scale(g.d + 1, 2 * g.d + 1);
  BITriple t;
  t.X = g.A;
  t.Y = astar * scale +
        Matrix::identity(n) * Rational(1, 2 * (2 * g.d + 1));
  t.Z = anticommutator(g.A, astar) * scale + g.A * Rational(1, 2 * g.d + 1);
  return t;
}

RelationReport verify_homomorphism(const BITriple& t) {
  RelationReport report;
  const std::size_t n = t.dim();
  const Matrix zero(n, n);
  report.entries.push_back(
      {"{X,Y} - Z = 0", anticommutator(t.X, t.Y) - t.Z == zero});
  report.entries.push_back(
      {"{Y,Z} - X = 0", anticommutator(t.Y, t.Z) - t.X == zero});
  const Matrix mu = anticommutator(t.Z, t.X) - t.Y;
  report.entries.push_back({"[{Z,X} - Y, X] = 0", commutator(mu, t.X) == zero});
  report.entries.push_back({"[{Z,X} - Y, Y] = 0", commutator(mu, t.Y) == zero});
  report.entries.push_back({"[{Z,X} - Y, Z] = 0", commutator(mu, t.Z) == zero});
  return report;
}

MatchReport match_with_v1(unsigned d, std::size_t x0) {
  const OddGraph g = build_odd_graph(d);
  const std::uint32_t base = g.vertices.at(x0);
  const unsigned omega = 2 * d + 1;
  const std::size_t n = g.vertices.size();

  const Representation outside = powerset_rep(d + 1);  // on Omega minus x0
  const Representation inside = powerset_rep(d);       // on x0
  const TensorRepresentation t = tensor_rep(outside, inside);
  const Matrix iota = iota_intertwiner(omega, base);

  // iota sends each vertex to a distinct standard basis vector of the
  // tensor space (all of weight 1), so restriction is row/column
  // selection once closure onto those rows is verified.
  std::vector<std::size_t> rows(n);
  std::vector<bool> is_vertex_row(t.dim(), false);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix col = iota.column(g.vertices[j]);
    std::size_t row = t.dim();
    for (std::size_t r = 0; r < t.dim(); ++r)
      if (col.at(r, 0) != 0) {
        row = r;
        break;
      }
    rows[j] = row;
    is_vertex_row[row] = true;
  }

  const RingElement one{Rational(1)};
  const RingElement e = RingElement::generator(Gen::E);
  const RingElement h = RingElement::generator(Gen::H);
  const RingElement rho = RingElement::generator(Gen::Rho);
  const Matrix x_amb = t.apply_delta(multiply(e, rho));
  const Matrix y_amb =
      t.apply(TensorElement::tensor(h, one) - TensorElement::tensor(one, h)) *
      Rational(1, 2);
  const Matrix z_amb =
      t.apply((TensorElement::tensor(e, one) - TensorElement::tensor(one, e)) *
              comultiply(rho));

  MatchReport report;
  report.v1_dim = eigenspace(t.apply_delta(h), 1).cols();
  report.closure_ok = true;
  auto restrict_cols = [&](const Matrix& amb) {
    Matrix res(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < t.dim(); ++r) {
        const Rational& v = amb.at(r, rows[j]);
        if (v == 0) continue;
        if (!is_vertex_row[r]) {
          report.closure_ok = false;
          continue;
        }
        const auto it = std::find(rows.begin(), rows.end(), r);
        res.at(static_cast<std::size_t>(it - rows.begin()), j) = v;
      }
    return res;
  };

  const BITriple images = terwilliger_images(g, x0);
  report.x_matches = restrict_cols(x_amb) == images.X;
  report.y_matches = restrict_cols(y_amb) == images.Y;
  report.z_matches = restrict_cols(z_amb) == images.Z;
  return report;
}

std::vector<std::pair<Rational, std::size_t>> spectrum_from_candidates(
    const Matrix& m, const std::vector<Rational>& candidates) {
  const std::size_t n = m.rows();
  Matrix product = Matrix::identity(n);
  for (const Rational& c : candidates)
    product = product * (m - Matrix::identity(n) * c);
  if (!(product == Matrix(n, n))) return {};

  std::vector<std::pair<Rational, std::size_t>> spectrum;
  std::size_t total = 0;
  for (const Rational& c : candidates) {
    const std::size_t mult = n - rank(m - Matrix::identity(n) * c);
    if (mult > 0) spectrum.push_back({c, mult});
    total += mult;
  }
  if (total != n) return {};  // cannot happen once annihilation holds
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

namespace {

std::vector<std::pair<Rational, std::size_t>> matrix_spectrum(const Matrix& m) {
  const auto roots = rational_roots(characteristic_polynomial(m));
  if (!roots)
    throw std::logic_error("matrix_spectrum: irrational eigenvalue");
  return roots->roots;
}

}  // namespace

DecompositionReport decompose_standard_module(unsigned d, std::size_t x0) {
  const OddGraph g = build_odd_graph(d);
  DecompositionReport report;
  report.d = d;
  report.base_index = x0;
  report.base_mask = g.vertices.at(x0);

  const auto left_parts = isotypic_components(powerset_rep(d + 1));
  const auto right_parts = isotypic_components(powerset_rep(d));

  for (const auto& lp : left_parts)
    for (const auto& rp : right_parts) {
      if ((lp.label.n + rp.label.n) % 2 == 0) continue;  // V(1) = 0
      SummandReport s;
      s.left = lp.label;
      s.right = rp.label;
      s.multiplicity = lp.multiplicity * rp.multiplicity;
      s.dim = std::min(lp.label.n, rp.label.n) + 1;
      s.order = (lp.label.n <= rp.label.n) ? FactorOrder::AsGiven
                                           : FactorOrder::Swapped;
      const unsigned m = std::min(lp.label.n, rp.label.n);
      const unsigned n = std::max(lp.label.n, rp.label.n);
      s.predicted = identify_v1(m, n, lp.label.sign, rp.label.sign, s.order);

      const TensorRepresentation pair =
          tensor_rep(build_irreducible(lp.label), build_irreducible(rp.label));
      const V1Module v1 = bi_on_v1(pair);
      if (!v1.identification)
        throw std::logic_error(
            "decompose_standard_module: summand V(1) not irreducible");
      s.observed = *v1.identification;
      s.identification_consistent =
          identification_consistent(s.predicted, s.observed);
      s.spectrum_x = matrix_spectrum(v1.triple.X);
      s.spectrum_y = matrix_spectrum(v1.triple.Y);
      s.spectrum_z = matrix_spectrum(v1.triple.Z);
      s.leonard = leonard_check(v1.triple).is_leonard;
      report.summands.push_back(std::move(s));
    }

  std::sort(report.summands.begin(), report.summands.end(),
            [](const SummandReport& a, const SummandReport& b) {
              return std::tie(a.dim, a.left.n, a.left.sign, a.right.n,
                              a.right.sign) <
                     std::tie(b.dim, b.left.n, b.left.sign, b.right.n,
                              b.right.sign);
            });

  report.total_dim = 0;
  std::map<Rational, std::size_t> pooled;
  for (const auto& s : report.summands) {
    report.total_dim += s.multiplicity * s.dim;
    for (const auto& [value, mult] : s.spectrum_x)
      pooled[value] += mult * s.multiplicity;
  }
  report.dimension_ok =
      Integer(report.total_dim) == binomial(2 * d + 1, d);

  std::vector<Rational> candidates;
  for (const auto& [value, mult] : pooled) candidates.push_back(value);
  report.adjacency_spectrum = spectrum_from_candidates(g.A, candidates);
  report.spectrum_partition_ok = !report.adjacency_spectrum.empty();
  for (const auto& [value, mult] : report.adjacency_spectrum)
    if (pooled[value] != mult) report.spectrum_partition_ok = false;
  return report;
}

}  // namespace skewbi
