#include "skewbi/sl2modules.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace skewbi {

std::string to_string(const IrrLabel& label) {
  return "L_" + std::to_string(label.n) + (label.sign > 0 ? "^+" : "^-");
}

Representation build_irreducible(const IrrLabel& label) {
  const unsigned n = label.n;
  const std::size_t dim = n + 1;
  Representation rep;
  rep.dim = dim;
  rep.E = Matrix(dim, dim);
  rep.F = Matrix(dim, dim);
  rep.H = Matrix(dim, dim);
  rep.rho = Matrix(dim, dim);
  for (unsigned i = 0; i <= n; ++i) {
    if (i >= 1) rep.E.at(i - 1, i) = i;
    if (i + 1 <= n) rep.F.at(i + 1, i) = n - i;
    rep.H.at(i, i) = static_cast<long>(n) - 2 * static_cast<long>(i);
    rep.rho.at(n - i, i) = label.sign;
    rep.basis_labels.push_back("v" + std::to_string(i));
  }
  return rep;
}

Matrix act(const Representation& rep, const RingElement& x) {
  Matrix result(rep.dim, rep.dim);
  for (const auto& [m, c] : x.terms()) {
    Matrix acc = Matrix::identity(rep.dim);
    for (unsigned t = 0; t < m.i; ++t) acc = acc * rep.E;
    for (unsigned t = 0; t < m.j; ++t) acc = acc * rep.F;
    for (unsigned t = 0; t < m.k; ++t) acc = acc * rep.H;
    for (unsigned t = 0; t < m.h; ++t) acc = acc * rep.rho;
    result = result + acc * c;
  }
  return result;
}

bool RelationReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.holds) return false;
  return true;
}

RelationReport verify_defining_relations(const Representation& rep) {
  RelationReport report;
  const Matrix& E = rep.E;
  const Matrix& F = rep.F;
  const Matrix& H = rep.H;
  auto add = [&](std::string name, const Matrix& lhs, const Matrix& rhs) {
    report.entries.push_back({std::move(name), lhs == rhs});
  };
  add("[H,E] = 2E", commutator(H, E), E * Rational(2));
  add("[H,F] = -2F", commutator(H, F), F * Rational(-2));
  add("[E,F] = H", commutator(E, F), H);
  if (rep.has_rho) {
    const Matrix& R = rep.rho;
    add("{rho,H} = 0", anticommutator(R, H), Matrix::zero(rep.dim, rep.dim));
    add("rho E = F rho", R * E, F * R);
    add("rho^2 = I", R * R, Matrix::identity(rep.dim));
  }
  return report;
}

Matrix TensorRepresentation::apply(const TensorElement& t) const {
  Matrix result(dim(), dim());
  for (const auto& [key, c] : t.terms()) {
    const Matrix ml = act(left, RingElement::monomial(key.first));
    const Matrix mr = act(right, RingElement::monomial(key.second));
    result = result + kron(ml, mr) * c;
  }
  return result;
}

Matrix TensorRepresentation::apply_delta(const RingElement& u) const {
  return apply(comultiply(u));
}

TensorRepresentation tensor_rep(const Representation& a, const Representation& b) {
  return TensorRepresentation{a, b};
}

Matrix cg_embedding(unsigned m, unsigned n, unsigned p) {
  if (p > std::min(m, n))
    throw std::invalid_argument("cg_embedding: p out of range");
  const unsigned N = m + n - 2 * p;
  const std::size_t dim = static_cast<std::size_t>(m + 1) * (n + 1);
  auto index = [&](unsigned i, unsigned j) {
    return static_cast<std::size_t>(i) * (n + 1) + j;
  };

  Matrix top(dim, 1);
  for (unsigned i = 0; i <= p; ++i) {
    const Rational sign = (i % 2 == 0) ? 1 : -1;
    top.at(index(i, p - i), 0) = sign * Rational(binomial(p, i));
  }

  const Representation lm = build_irreducible({m, +1});
  const Representation ln = build_irreducible({n, +1});
  const Matrix deltaF =
      kron(lm.F, Matrix::identity(n + 1)) + kron(Matrix::identity(m + 1), ln.F);

  Matrix result(dim, N + 1);
  Matrix cur = top;
  Rational falling = 1;
  for (unsigned k = 0; k <= N; ++k) {
    if (k > 0) {
      cur = deltaF * cur;
      falling *= Rational(static_cast<long>(N) - static_cast<long>(k) + 1);
    }
    for (std::size_t r = 0; r < dim; ++r) result.at(r, k) = cur.at(r, 0) / falling;
  }
  return result;
}

std::vector<CGSummand> cg_decompose(const IrrLabel& a, const IrrLabel& b) {
  const unsigned m = a.n, n = b.n;
  const TensorRepresentation trep =
      tensor_rep(build_irreducible(a), build_irreducible(b));
  const Matrix delta_rho = trep.apply_delta(RingElement::generator(Gen::Rho));

  std::vector<CGSummand> summands;
  for (unsigned p = 0; p <= std::min(m, n); ++p) {
    const unsigned N = m + n - 2 * p;
    const int sign = ((p % 2 == 0) ? 1 : -1) * a.sign * b.sign;
    Matrix emb = cg_embedding(m, n, p);

    // rho-stability of the image.
    if (!solve(emb, delta_rho * emb))
      throw std::logic_error("cg_decompose: image not rho-stable");
    // Sign check on extremal vectors: Delta(rho) f(v_0) = sign * f(v_N).
    if (delta_rho * emb.column(0) != emb.column(N) * Rational(sign))
      throw std::logic_error("cg_decompose: rho-sign mismatch");

    summands.push_back({IrrLabel{N, sign}, std::move(emb)});
  }
  return summands;
}

namespace {

std::string subset_label(std::uint32_t mask) {
  if (mask == 0) return "{}";
  std::string s = "{";
  bool first = true;
  for (unsigned b = 0; b < 32; ++b)
    if (mask & (1u << b)) {
      if (!first) s += ",";
      s += std::to_string(b);
      first = false;
    }
  return s + "}";
}

}  // namespace

Representation powerset_rep(unsigned omega_size) {
  if (omega_size > 16)
    throw std::invalid_argument("powerset_rep: |Omega| above desk-scale cap");
  const std::size_t dim = std::size_t(1) << omega_size;
  const std::uint32_t full = static_cast<std::uint32_t>(dim - 1);
  Representation rep;
  rep.dim = dim;
  rep.E = Matrix(dim, dim);
  rep.F = Matrix(dim, dim);
  rep.H = Matrix(dim, dim);
  rep.rho = Matrix(dim, dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    const int size = std::popcount(x);
    rep.H.at(x, x) = static_cast<long>(omega_size) - 2 * size;
    rep.rho.at(full ^ x, x) = 1;
    for (unsigned b = 0; b < omega_size; ++b) {
      if (x & (1u << b)) rep.E.at(x ^ (1u << b), x) = 1;  // y covered by x
      else rep.F.at(x | (1u << b), x) = 1;                // y covering x
    }
    rep.basis_labels.push_back(subset_label(x));
  }
  return rep;
}

Matrix iota_intertwiner(unsigned omega_size, std::uint32_t x0) {
  const std::size_t dim = std::size_t(1) << omega_size;
  if (x0 >= dim) throw std::invalid_argument("iota_intertwiner: x0 not a subset");
  const std::uint32_t full = static_cast<std::uint32_t>(dim - 1);
  const std::uint32_t outside = full ^ x0;
  const unsigned right_size = std::popcount(x0);

  // Index of a subset of S within the binary-counter enumeration of 2^S,
  // with S's elements enumerated in increasing order.
  auto compress = [](std::uint32_t subset, std::uint32_t set) {
    std::uint32_t idx = 0;
    unsigned out = 0;
    for (unsigned b = 0; b < 32; ++b)
      if (set & (1u << b)) {
        if (subset & (1u << b)) idx |= (1u << out);
        ++out;
      }
    return idx;
  };

  Matrix iota(dim, dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    const std::uint32_t left_idx = compress(x & outside, outside);
    const std::uint32_t right_idx = compress(x & x0, x0);
    iota.at((std::size_t(left_idx) << right_size) | right_idx, x) = 1;
  }
  return iota;
}

Matrix lowering_basis(const Representation& rep, const Matrix& v, unsigned n) {
  Matrix basis(rep.dim, n + 1);
  Matrix cur = v;
  Rational falling = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      cur = rep.F * cur;
      falling *= Rational(static_cast<long>(n) - static_cast<long>(k) + 1);
    }
    for (std::size_t r = 0; r < rep.dim; ++r) basis.at(r, k) = cur.at(r, 0) / falling;
  }
  return basis;
}

std::vector<IsotypicComponent> isotypic_components(const Representation& rep) {
  std::vector<IsotypicComponent> components;
  // H is diagonal in every representation built here; candidate highest
  // weights are its distinct nonnegative integer diagonal entries.
  std::vector<unsigned> candidates;
  for (std::size_t d = 0; d < rep.dim; ++d) {
    const Rational& w = rep.H.at(d, d);
    if (w < 0 || denominator(w) != 1) continue;
    const unsigned n = static_cast<unsigned>(numerator(w));
    if (std::find(candidates.begin(), candidates.end(), n) == candidates.end())
      candidates.push_back(n);
  }
  std::sort(candidates.begin(), candidates.end());
  for (unsigned n : candidates) {
    // Highest-weight space of weight n: ker(H - nI) meet ker(E).
    const Matrix weight = eigenspace(rep.H, Rational(n));
    if (weight.cols() == 0) continue;
    const Matrix e_on_weight = rep.E * weight;
    const Matrix coords = kernel_basis(e_on_weight);
    if (coords.cols() == 0) continue;
    const Matrix hw = weight * coords;

    // Involution sigma(v) = E^n (rho v) / n! on the highest-weight space;
    // its +-/-- eigenspaces give the multiplicities of L_n^+ / L_n^-.
    Matrix image = rep.rho * hw;
    for (unsigned t = 0; t < n; ++t) image = rep.E * image;
    image = image * (Rational(1) / Rational(factorial(n)));
    const auto sigma = solve(hw, image);
    if (!sigma)
      throw std::logic_error("isotypic_components: rho does not preserve isotypic space");
    for (int sign : {+1, -1}) {
      const Matrix eig = eigenspace(*sigma, Rational(sign));
      if (eig.cols() == 0) continue;
      components.push_back({IrrLabel{n, sign},
                            static_cast<unsigned>(eig.cols()), hw * eig});
    }
  }
  return components;
}

std::vector<std::pair<IrrLabel, unsigned>> powerset_decompose(unsigned omega_size) {
  const long D = omega_size;
  std::vector<std::pair<IrrLabel, unsigned>> result;
  for (long i = 0; 2 * i <= D; ++i) {
    const Rational mult = Rational(D - 2 * i + 1, D - i + 1) * Rational(binomial(D, i));
    if (denominator(mult) != 1)
      throw std::logic_error("powerset_decompose: non-integral multiplicity");
    result.push_back({IrrLabel{static_cast<unsigned>(D - 2 * i),
                               (i % 2 == 0) ? +1 : -1},
                      static_cast<unsigned>(numerator(mult))});
  }

  // Cross-check against the computed isotypic dimensions.
  const auto computed = isotypic_components(powerset_rep(omega_size));
  for (const auto& [label, mult] : result) {
    unsigned found = 0;
    for (const auto& comp : computed)
      if (comp.label == label) found = comp.multiplicity;
    if (found != mult)
      throw std::logic_error("powerset_decompose: formula disagrees with isotypic dimension");
  }
  unsigned total = 0;
  for (const auto& comp : computed) total += comp.multiplicity * (comp.label.n + 1);
  if (total != (1u << omega_size))
    throw std::logic_error("powerset_decompose: dimensions do not sum to 2^|Omega|");
  return result;
}

}  // namespace skewbi
