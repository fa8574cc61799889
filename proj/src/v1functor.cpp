#include "skewbi/v1functor.hpp"

namespace skewbi {

namespace {

// columns(img) <= column span of space, checked by rank stability.
bool contained_in(const Matrix& space, const Matrix& img) {
  bool img_zero = true;
  for (std::size_t r = 0; r < img.rows() && img_zero; ++r)
    for (std::size_t c = 0; c < img.cols(); ++c)
      if (img.at(r, c) != 0) {
        img_zero = false;
        break;
      }
  if (img_zero) return true;
  if (space.cols() == 0) return false;
  return rank(space) == rank(space.hcat(img));
}

}  // namespace

WeightSubspace weight_subspace(const TensorRepresentation& t,
                               const Rational& theta) {
  const Matrix dh = t.apply_delta(RingElement::generator(Gen::H));
  WeightSubspace w{theta, eigenspace(dh, theta)};
  if (w.basis.cols() == 0) return w;

  struct Step {
    TensorElement op;
    Rational target;
    const char* name;
  };
  const RingElement one{Rational(1)};
  const RingElement e = RingElement::generator(Gen::E);
  const RingElement f = RingElement::generator(Gen::F);
  const std::vector<Step> steps = {
      {TensorElement::tensor(e, one), theta + 2, "E x 1"},
      {TensorElement::tensor(one, e), theta + 2, "1 x E"},
      {TensorElement::tensor(f, one), theta - 2, "F x 1"},
      {TensorElement::tensor(one, f), theta - 2, "1 x F"},
      {comultiply(RingElement::generator(Gen::Rho)), -theta, "Delta(rho)"},
  };
  for (const auto& step : steps) {
    const Matrix img = t.apply(step.op) * w.basis;
    const Matrix target = eigenspace(dh, step.target);
    if (!contained_in(target, img))
      throw std::logic_error(std::string("weight ladder violated by ") +
                             step.name);
  }
  return w;
}

namespace {

Matrix restrict_to(const Matrix& basis, const Matrix& op, const char* name) {
  const auto coeffs = solve(basis, op * basis);
  if (!coeffs)
    throw ClosureFailure(std::string(name) + " does not preserve V(1)");
  return *coeffs;
}

bool is_scalar(const Matrix& m) {
  return m == Matrix::identity(m.rows()) * m.at(0, 0);
}

}  // namespace

V1Module bi_on_v1(const TensorRepresentation& t) {
  V1Module v;
  v.basis = weight_subspace(t, 1);
  const std::size_t d = v.basis.dim();
  if (d == 0) {
    v.triple = {Matrix(0, 0), Matrix(0, 0), Matrix(0, 0)};
    return v;
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

  v.triple.X = restrict_to(v.basis.basis, x_amb, "X");
  v.triple.Y = restrict_to(v.basis.basis, y_amb, "Y");
  v.triple.Z = restrict_to(v.basis.basis, z_amb, "Z");

  const CentralElements ce = central_elements(v.triple);
  if (!(ce.kappa == Matrix(d, d)) || !(ce.lambda == Matrix(d, d)))
    throw std::logic_error("kappa or lambda nonzero on V(1)");

  // Identification only makes sense for irreducible triples; a scalar mu
  // is a cheap necessary condition that filters out the obviously
  // reducible cases before the expensive check.
  if (is_scalar(ce.mu) && d <= 64 && is_irreducible_matrix(v.triple))
    v.identification = identify_irreducible(v.triple);
  return v;
}

WBasis explicit_w_basis(unsigned m, unsigned n) {
  if (m > n || (m + n) % 2 == 0)
    throw std::invalid_argument("explicit_w_basis: need m <= n, m+n odd");
  const std::size_t cols = m + 1;
  WBasis w{Matrix((m + 1) * (n + 1), cols), Matrix(cols, cols),
           Matrix(cols, cols)};
  const unsigned base = (n - m - 1) / 2;
  for (unsigned i = 0; i <= m; ++i) {
    w.basis.at((m - i) * (n + 1) + (base + i), i) = 1;
    w.X.at(m - i, i) = Rational(m + n + 1, 2) - i;
    if (i >= 1) w.X.at(m - i + 1, i) = i;
    w.Y.at(i, i) = Rational(2 * i) - m - Rational(1, 2);
  }
  return w;
}

BIModuleParams identify_v1(unsigned m, unsigned n, int delta, int epsilon,
                           FactorOrder order) {
  if (m > n || (m + n) % 2 == 0)
    throw std::invalid_argument("identify_v1: need m <= n, m+n odd");
  if ((delta != 1 && delta != -1) || (epsilon != 1 && epsilon != -1))
    throw std::invalid_argument("identify_v1: signs must be +-1");

  BIModuleParams p;
  p.n = m;
  const Rational half_n1 = Rational(n + 1, 2);
  const Rational half_m1 = Rational(m + 1, 2);
  if (m % 2 == 0) {
    p.parity = Parity::Odd;
    p.a = half_n1;
    p.b = -half_m1;
    p.c = -half_n1;
  } else {
    p.parity = Parity::Even;
    p.a = half_n1;
    p.b = half_m1;
    p.c = half_n1;
    p.twist = {-1, 1};
  }

  // Every sign/order variant is a {+-1}^2 twist of the base case; the
  // second component records the factor swap, the first the product of
  // the rho signs.
  const TwistPair g{delta * epsilon, order == FactorOrder::AsGiven ? 1 : -1};
  p.twist = {p.twist.eps * g.eps, p.twist.eps_prime * g.eps_prime};

  if (p.parity == Parity::Odd) {
    // Odd-dimensional twists rename parameters instead.
    if (p.twist.eps < 0) {
      p.a = -p.a;
      p.c = -p.c;
    }
    if (p.twist.eps_prime < 0) {
      p.b = -p.b;
      p.c = -p.c;
    }
    p.twist = {1, 1};
  }
  return p;
}

}  // namespace skewbi
