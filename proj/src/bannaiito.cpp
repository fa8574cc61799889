#include "skewbi/bannaiito.hpp"

#include <stdexcept>

namespace skewbi {

std::string to_string(const BIModuleParams& p) {
  std::string s = (p.parity == Parity::Odd) ? "O_" : "E_";
  s += std::to_string(p.n) + "(" + to_string(p.a) + "," + to_string(p.b) + "," +
       to_string(p.c) + ")";
  if (p.twist != TwistPair{})
    s += std::string("^(") + (p.twist.eps > 0 ? "+1" : "-1") + "," +
         (p.twist.eps_prime > 0 ? "+1" : "-1") + ")";
  return s;
}

namespace {

void check_parity(const BIModuleParams& p) {
  const bool n_even = (p.n % 2 == 0);
  if ((p.parity == Parity::Odd) != n_even)
    throw std::invalid_argument("parity/n mismatch");
}

}  // namespace

BITriple build_bi_module(const BIModuleParams& p) {
  check_parity(p);
  const unsigned n = p.n;
  const std::size_t dim = n + 1;
  const Rational &a = p.a, &b = p.b;
  const Rational c = p.c;

  auto theta = [&](unsigned i, const Rational& v) {
    const Rational raw = (2 * v - Rational(n) + 2 * Rational(i)) / 2;
    return (i % 2 == 0) ? raw : Rational(-raw);
  };
  auto phi = [&](unsigned i) -> Rational {
    if (p.parity == Parity::Odd) {
      if (i % 2 == 0)
        return Rational(i) * (Rational(n) + 1 - 2 * Rational(i) - 2 * a - 2 * b - 2 * c) / 2;
      return (Rational(i) - Rational(n) - 1) *
             (Rational(n) + 1 - 2 * Rational(i) - 2 * a - 2 * b + 2 * c) / 2;
    }
    if (i % 2 == 0) return Rational(i) * (Rational(n) - Rational(i) + 1);
    const Rational half = (2 * a + 2 * b - Rational(n) + 2 * Rational(i) - 1) / 2;
    return c * c - half * half;
  };

  BITriple t;
  t.X = Matrix(dim, dim);
  t.Y = Matrix(dim, dim);
  for (unsigned i = 0; i <= n; ++i) {
    t.X.at(i, i) = theta(i, a);
    if (i + 1 <= n) t.X.at(i + 1, i) = 1;
    t.Y.at(i, i) = theta(i, b);
    if (i >= 1) t.Y.at(i - 1, i) = phi(i);
  }
  const ScalarCentrals s = module_central_scalars(p);
  t.Z = anticommutator(t.X, t.Y) - Matrix::identity(dim) * s.kappa;
  return twist(t, p.twist);
}

CentralElements central_elements(const BITriple& t) {
  if (!t.X.is_square() || t.X.rows() != t.Y.rows() || t.X.rows() != t.Z.rows())
    throw std::invalid_argument("central_elements: dimension mismatch");
  return {anticommutator(t.X, t.Y) - t.Z, anticommutator(t.Y, t.Z) - t.X,
          anticommutator(t.Z, t.X) - t.Y};
}

Matrix bi_casimir(const BITriple& t) {
  if (!t.X.is_square() || t.X.rows() != t.Y.rows() || t.X.rows() != t.Z.rows())
    throw std::invalid_argument("bi_casimir: dimension mismatch");
  return t.X * t.X + t.Y * t.Y + t.Z * t.Z;
}

BITriple twist(const BITriple& t, const TwistPair& g) {
  BITriple r = t;
  if (g.eps < 0) r.X = -r.X;
  if (g.eps_prime < 0) r.Y = -r.Y;
  if (g.eps * g.eps_prime < 0) r.Z = -r.Z;
  return r;
}

BITriple twist_cyclic(const BITriple& t, unsigned g_mod_3) {
  switch (g_mod_3 % 3) {
    case 1: return {t.Y, t.Z, t.X};
    case 2: return {t.Z, t.X, t.Y};
    default: return t;
  }
}

ScalarCentrals module_central_scalars(const BIModuleParams& p) {
  check_parity(p);
  const Rational np1 = Rational(p.n) + 1;
  const Rational &a = p.a, &b = p.b, &c = p.c;
  if (p.parity == Parity::Odd)
    return {2 * a * b - c * np1, 2 * b * c - a * np1, 2 * c * a - b * np1};
  const Rational s2 = (np1 / 2) * (np1 / 2);
  return {c * c - a * a - b * b + s2, a * a - b * b - c * c + s2,
          b * b - c * c - a * a + s2};
}

bool is_irreducible_params(const BIModuleParams& p) {
  check_parity(p);
  const long n = p.n;
  const Rational &a = p.a, &b = p.b, &c = p.c;
  std::vector<Rational> sums;
  std::vector<Rational> forbidden;
  if (p.parity == Parity::Odd) {
    sums = {a + b + c, a - b - c, -a + b - c, -a - b + c};
    for (long i = 2; i <= n; i += 2)
      forbidden.push_back(Rational(n + 1, 2) - i);
  } else {
    sums = {a + b + c, -a + b + c, a - b + c, a + b - c};
    for (long i = 0; i <= n - 1; i += 2)
      forbidden.push_back(Rational(n - 1, 2) - i);
  }
  for (const auto& s : sums)
    for (const auto& f : forbidden)
      if (s == f) return false;
  return true;
}

namespace {

// Vectorized matrix appended to a row-reduced span; returns true if the
// dimension grew.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t width) : width_(width) {}

  bool insert(const Matrix& m) {
    std::vector<Rational> v(width_);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[idx++] = m.at(r, c);
    // Reduce against existing rows.
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational factor = v[pivot];
      for (std::size_t k = 0; k < width_; ++k) v[k] -= factor * row[k];
    }
    std::size_t pivot = width_;
    for (std::size_t k = 0; k < width_; ++k)
      if (v[k] != 0) {
        pivot = k;
        break;
      }
    if (pivot == width_) return false;
    const Rational inv = Rational(1) / v[pivot];
    for (auto& e : v) e *= inv;
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

}  // namespace

bool is_irreducible_matrix(const BITriple& t) {
  const std::size_t d = t.dim();
  if (d == 0) throw std::invalid_argument("is_irreducible_matrix: empty triple");
  const std::size_t target = d * d;
  SpanBuilder span(target);
  std::vector<Matrix> frontier;
  span.insert(Matrix::identity(d));
  frontier.push_back(Matrix::identity(d));
  const Matrix* gens[3] = {&t.X, &t.Y, &t.Z};
  while (!frontier.empty() && span.dimension() < target) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (const Matrix* g : gens) {
        Matrix prod = m * (*g);
        if (span.insert(prod)) next.push_back(std::move(prod));
        if (span.dimension() == target) return true;
      }
    frontier = std::move(next);
  }
  return span.dimension() == target;
}

namespace {

// Requires m to be a scalar matrix; returns the scalar.
Rational scalar_of(const Matrix& m, const char* what) {
  const Rational v = m.at(0, 0);
  if (m != Matrix::identity(m.rows()) * v)
    throw std::domain_error(std::string("identify_irreducible: ") + what +
                            " is not scalar (input not irreducible?)");
  return v;
}

}  // namespace

bool identification_consistent(const BIModuleParams& p,
                               const Identification& observed) {
  if (p.parity != observed.parity || p.n != observed.n) return false;
  if (p.parity == Parity::Odd)
    return observed.a && observed.b && observed.c && p.a == *observed.a &&
           p.b == *observed.b && p.c == *observed.c;
  return observed.a_sq && observed.b_sq && observed.c_sq &&
         p.twist == observed.twist && p.a * p.a == *observed.a_sq &&
         p.b * p.b == *observed.b_sq && p.c * p.c == *observed.c_sq;
}

Identification identify_irreducible(const BITriple& t) {
  const std::size_t dim = t.dim();
  Identification id;
  id.n = static_cast<unsigned>(dim - 1);
  if (dim % 2 == 1) {
    id.parity = Parity::Odd;
    id.a = t.X.trace();
    id.b = t.Y.trace();
    id.c = t.Z.trace();
    return id;
  }
  id.parity = Parity::Even;
  const Rational target = -Rational(dim) / 2;  // -(n+1)/2
  const Rational tx = t.X.trace();
  const Rational ty = t.Y.trace();
  if (tx == 0 || ty == 0)
    throw std::domain_error("identify_irreducible: zero trace, twist undeterminable");
  id.twist.eps = (tx == target) ? +1 : -1;
  id.twist.eps_prime = (ty == target) ? +1 : -1;
  if ((id.twist.eps > 0 ? tx : Rational(-tx)) != target ||
      (id.twist.eps_prime > 0 ? ty : Rational(-ty)) != target)
    throw std::domain_error("identify_irreducible: traces incompatible with E_n");

  const BITriple untwisted = twist(t, id.twist);
  const CentralElements ce = central_elements(untwisted);
  const Rational kappa = scalar_of(ce.kappa, "kappa");
  const Rational lambda = scalar_of(ce.lambda, "lambda");
  const Rational mu = scalar_of(ce.mu, "mu");
  const Rational s2 = (Rational(dim) / 2) * (Rational(dim) / 2);
  id.a_sq = s2 - (mu + kappa) / 2;
  id.b_sq = s2 - (kappa + lambda) / 2;
  id.c_sq = s2 - (lambda + mu) / 2;
  return id;
}

bool leonard_predict(const BIModuleParams& p) {
  if (!is_irreducible_params(p))
    throw std::domain_error("leonard_predict: parameters not irreducible");
  const long n = p.n;
  for (long i = 0; i <= n - 1; ++i) {
    const Rational f = Rational(n - 1, 2) - i;
    if (p.a == f || p.b == f || p.c == f) return false;
  }
  return true;
}

namespace {

bool tridiagonal_irreducible(const Matrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = (i > j) ? i - j : j - i;
      if (gap > 1 && m.at(i, j) != 0) return false;
      if (gap == 1 && m.at(i, j) == 0) return false;
    }
  return true;
}

Matrix permute(const Matrix& m, const std::vector<std::size_t>& order) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = m.at(order[i], order[j]);
  return r;
}

}  // namespace

LeonardVerdict leonard_check(const BITriple& t) {
  const std::size_t dim = t.dim();
  if (dim == 0) throw std::invalid_argument("leonard_check: empty triple");
  LeonardVerdict verdict;
  verdict.is_leonard = true;

  const Matrix* ops[3] = {&t.X, &t.Y, &t.Z};
  const char* names[3] = {"X", "Y", "Z"};
  for (int which = 0; which < 3; ++which) {
    OperatorDiagnostics diag;
    diag.name = names[which];
    const Matrix& op = *ops[which];

    const auto roots = rational_roots(characteristic_polynomial(op));
    if (!roots)
      throw std::domain_error(std::string("leonard_check: irrational spectrum of ") +
                              names[which]);
    diag.rational_spectrum = true;
    diag.eigenvalues = roots->roots;
    diag.simple_spectrum = true;
    for (const auto& [v, mult] : diag.eigenvalues)
      if (mult > 1) diag.simple_spectrum = false;

    // Eigenbasis: eigenvalues ascending, first nonzero entry of each
    // column normalized to 1.
    Matrix basis(dim, 0);
    for (const auto& [value, mult] : diag.eigenvalues) {
      Matrix space = eigenspace(op, value);
      for (std::size_t c = 0; c < space.cols(); ++c) {
        Matrix col = space.column(c);
        for (std::size_t r = 0; r < dim; ++r)
          if (col.at(r, 0) != 0) {
            col = col * (Rational(1) / col.at(r, 0));
            break;
          }
        basis = basis.hcat(col);
      }
    }
    diag.diagonalizable = (basis.cols() == dim);

    if (diag.diagonalizable && diag.simple_spectrum) {
      const Matrix basis_inv = *inverse(basis);
      const Matrix a = basis_inv * (*ops[(which + 1) % 3]) * basis;
      const Matrix b = basis_inv * (*ops[(which + 2) % 3]) * basis;

      std::vector<std::vector<bool>> support(dim, std::vector<bool>(dim, false));
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (i != j && (a.at(i, j) != 0 || a.at(j, i) != 0))
            support[i][j] = support[j][i] = true;
      auto order = path_order(support);
      // The support of the first conjugated operator pins the candidate
      // ordering; the second must be tridiagonal under the same one.
      if (order) {
        diag.path_ordering_found = true;
        const Matrix pa = permute(a, *order);
        const Matrix pb = permute(b, *order);
        diag.first_other_tridiagonal = tridiagonal_irreducible(pa);
        diag.second_other_tridiagonal = tridiagonal_irreducible(pb);
      }
    }

    const bool ok = diag.diagonalizable && diag.simple_spectrum &&
                    diag.path_ordering_found && diag.first_other_tridiagonal &&
                    diag.second_other_tridiagonal;
    if (!ok) verdict.is_leonard = false;
    verdict.per_operator.push_back(std::move(diag));
  }
  return verdict;
}

}  // namespace skewbi
