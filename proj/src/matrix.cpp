#include "skewbi/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewbi {

Matrix::Matrix(std::size_t rows, std::size_t cols,
               std::initializer_list<Rational> entries)
    : rows_(rows), cols_(cols), entries_(entries) {
  if (entries_.size() != rows * cols)
    throw std::invalid_argument("entry count does not match dimensions");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Rational Matrix::trace() const {
  Rational s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += at(i, i);
  return s;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("dimension mismatch in +");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] += other.entries_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("dimension mismatch in -");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] -= other.entries_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("dimension mismatch in *");
  Matrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& bkj = other.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Matrix Matrix::operator*(const Rational& scalar) const {
  Matrix r = *this;
  for (auto& e : r.entries_) e *= scalar;
  return r;
}

Matrix Matrix::hcat(const Matrix& other) const {
  if (cols_ == 0 && rows_ == 0) return other;
  if (other.cols_ == 0) return *this;
  if (rows_ != other.rows_)
    throw std::invalid_argument("row mismatch in hcat");
  Matrix r(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j)
      r.at(i, cols_ + j) = other.at(i, j);
  }
  return r;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix r(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b.at(k, l) != 0)
            r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  return a * b + b * a;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < m.rows() && m.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.at(row, c), m.at(pivot_row, c));
    const Rational inv_pivot = Rational(1) / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv_pivot;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

Matrix kernel_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis.at(fc, k) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p)
      basis.at(pivots[p], k) = -r.at(p, fc);
  }
  return basis;
}

Matrix eigenspace(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw std::invalid_argument("eigenspace needs a square matrix");
  return kernel_basis(m - Matrix::identity(m.rows()) * lambda);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in solve");
  Matrix aug = a.hcat(b);
  const auto pivots = rref_in_place(aug);
  // Inconsistent iff some pivot falls in the b block.
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t p = 0; p < pivots.size(); ++p)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(pivots[p], j) = aug.at(p, a.cols() + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse needs a square matrix");
  Matrix aug = m.hcat(Matrix::identity(m.rows()));
  const auto pivots = rref_in_place(aug);
  // A pivot in the identity block means m itself is rank deficient.
  if (pivots.size() != m.rows() ||
      (!pivots.empty() && pivots.back() >= m.cols()))
    return std::nullopt;
  Matrix inv(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      inv.at(i, j) = aug.at(i, m.cols() + j);
  return inv;
}

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  // Faddeev--LeVerrier: M_1 = m, c_{n-k} determined by traces.
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational ck = -mk.trace() / Rational(static_cast<long>(k));
    coeffs[n - k] = ck;
    if (k < n) mk = m * (mk + Matrix::identity(n) * ck);
  }
  return coeffs;
}

namespace {

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

// Deflates (x - root) out of coeffs in place; assumes root is a root.
void deflate(std::vector<Rational>& coeffs, const Rational& root) {
  const std::size_t deg = coeffs.size() - 1;
  std::vector<Rational> q(deg);
  Rational carry = coeffs[deg];
  for (std::size_t k = deg; k-- > 0;) {
    q[k] = carry;
    carry = coeffs[k] + root * carry;
  }
  coeffs = std::move(q);
}

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> ds;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      ds.push_back(d);
      if (d * d != v) ds.push_back(v / d);
    }
  return ds;
}

}  // namespace

std::optional<RationalRoots> rational_roots(std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  RationalRoots out;
  while (coeffs.size() > 1) {
    // Strip x^k factors first.
    if (coeffs.front() == 0) {
      std::size_t mult = 0;
      while (coeffs.size() > 1 && coeffs.front() == 0) {
        coeffs.erase(coeffs.begin());
        ++mult;
      }
      bool merged = false;
      for (auto& [r, m] : out.roots)
        if (r == 0) { m += mult; merged = true; }
      if (!merged) out.roots.emplace_back(Rational(0), mult);
      continue;
    }
    // All spectra in scope are half-integers: try denominators 1 and 2 over
    // a bounded numerator window before the full rational-root enumeration.
    Rational found;
    bool have_root = false;
    {
      // Root bound: 1 + max |c_k / c_deg| (Cauchy).
      Rational bound = 0;
      const Rational& lead = coeffs.back();
      for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
        Rational v = abs(coeffs[k] / lead);
        if (v > bound) bound = v;
      }
      bound += 1;
      const Integer top = numerator(bound) / denominator(bound) + 1;
      if (top <= 4096) {
        for (Integer num = -2 * top; num <= 2 * top && !have_root; ++num) {
          const Rational cand(num, 2);
          if (eval_poly(coeffs, cand) == 0) {
            found = cand;
            have_root = true;
          }
        }
      }
    }
    if (!have_root) {
      // Scale to an integer polynomial; candidates p/q with p | constant
      // term and q | leading coefficient.
      Integer den_lcm = 1;
      for (const auto& c : coeffs) den_lcm = lcm(den_lcm, denominator(c));
      std::vector<Integer> ic;
      ic.reserve(coeffs.size());
      for (const auto& c : coeffs)
        ic.push_back(Integer(numerator(c) * (den_lcm / denominator(c))));
      for (const auto& p : divisors(ic.front())) {
        for (const auto& q : divisors(ic.back())) {
          for (int sign : {1, -1}) {
            const Rational cand(sign * p, q);
            if (eval_poly(coeffs, cand) == 0) {
              found = cand;
              have_root = true;
              break;
            }
          }
          if (have_root) break;
        }
        if (have_root) break;
      }
    }
    if (!have_root) return std::nullopt;
    std::size_t mult = 0;
    while (coeffs.size() > 1 && eval_poly(coeffs, found) == 0) {
      deflate(coeffs, found);
      ++mult;
    }
    out.roots.emplace_back(found, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<std::vector<std::size_t>> path_order(
    const std::vector<std::vector<bool>>& offdiag_support) {
  const std::size_t n = offdiag_support.size();
  if (n == 0) return std::vector<std::size_t>{};
  if (n == 1) return std::vector<std::size_t>{0};

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && offdiag_support[i][j]) adj[i].push_back(j);

  std::size_t endpoint = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1) {
      if (adj[i].empty()) return std::nullopt;  // disconnected (n >= 2)
      if (endpoint == n) endpoint = i;
    }
  }
  if (endpoint == n) return std::nullopt;  // contains a cycle

  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  std::size_t cur = endpoint;
  while (true) {
    order.push_back(cur);
    seen[cur] = true;
    std::size_t next = n;
    for (auto v : adj[cur])
      if (!seen[v]) next = v;
    if (next == n) break;
    cur = next;
  }
  if (order.size() != n) return std::nullopt;  // disconnected
  return order;
}

std::size_t generated_algebra_dimension(const std::vector<Matrix>& gens) {
  if (gens.empty()) return 0;
  const std::size_t d = gens.front().rows();
  const std::size_t width = d * d;

  // Row-reduced span of vectorized matrices; insert returns true on growth.
  std::vector<std::pair<std::size_t, std::vector<Rational>>> span;
  auto insert = [&](const Matrix& m) {
    std::vector<Rational> v(width);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v[r * d + c] = m.at(r, c);
    for (const auto& [pivot, row] : span) {
      if (v[pivot] == 0) continue;
      const Rational factor = v[pivot];
      for (std::size_t k = 0; k < width; ++k) v[k] -= factor * row[k];
    }
    std::size_t pivot = width;
    for (std::size_t k = 0; k < width; ++k)
      if (v[k] != 0) {
        pivot = k;
        break;
      }
    if (pivot == width) return false;
    const Rational inv = Rational(1) / v[pivot];
    for (auto& e : v) e *= inv;
    span.emplace_back(pivot, std::move(v));
    return true;
  };

  std::vector<Matrix> frontier;
  insert(Matrix::identity(d));
  frontier.push_back(Matrix::identity(d));
  while (!frontier.empty() && span.size() < width) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        Matrix prod = m * g;
        if (insert(prod)) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return span.size();
}

}  // namespace skewbi
