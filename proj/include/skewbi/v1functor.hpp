#pragma once

#include <optional>
#include <stdexcept>

#include "skewbi/bannaiito.hpp"
#include "skewbi/sl2modules.hpp"

namespace skewbi {

// Weight subspace V(theta) of a tensor representation: the columns of
// `basis` span the Delta(H)-eigenspace with eigenvalue theta.
struct WeightSubspace {
  Rational theta;
  Matrix basis;

  std::size_t dim() const { return basis.cols(); }
};

// Computes V(theta) and validates the weight ladder:
//   (E x 1) V(theta) <= V(theta+2),  (1 x E) V(theta) <= V(theta+2),
//   (F x 1) V(theta) <= V(theta-2),  (1 x F) V(theta) <= V(theta-2),
//   Delta(rho) V(theta) <= V(-theta).
// Ladder violations throw std::logic_error (they cannot occur for honest
// tensor representations). Empty subspaces are fine.
WeightSubspace weight_subspace(const TensorRepresentation& t,
                               const Rational& theta);

// Raised when an operator image fails to lie in the span of the V(1)
// basis. Mathematically impossible; signals a bug.
struct ClosureFailure : std::logic_error {
  explicit ClosureFailure(const std::string& what) : std::logic_error(what) {}
};

// V(1) of a tensor representation together with the restricted triple
//   X = Delta(E rho),  Y = (H x 1 - 1 x H)/2,  Z = (E x 1 - 1 x E) Delta(rho)
// expressed in the V(1) basis. `identification` is filled only when the
// triple turns out to be an irreducible module that identify_irreducible
// can name.
struct V1Module {
  WeightSubspace basis;
  BITriple triple;
  std::optional<Identification> identification;
};

// Restricts the three operators to V(1). Verifies {X,Y} = Z and
// {Y,Z} = X exactly; when the triple is irreducible additionally checks
// that {Z,X} - Y is scalar. Throws ClosureFailure / std::logic_error on
// violations.
V1Module bi_on_v1(const TensorRepresentation& t);

// Closed-form model of V(1) inside L_m^+ x L_n^+ (m <= n, m+n odd):
// basis columns w_i = v_{m-i} x v_{(n-m-1)/2+i} and the X, Y actions
//   X w_i = ((m+n+1)/2 - i) w_{m-i} + i w_{m-i+1},
//   Y w_i = (2i - m - 1/2) w_i
// as (m+1) x (m+1) matrices in the w basis.
struct WBasis {
  Matrix basis;  // (m+1)(n+1) x (m+1), columns w_0..w_m
  Matrix X;
  Matrix Y;
};

// Throws std::invalid_argument unless m <= n and m+n is odd.
WBasis explicit_w_basis(unsigned m, unsigned n);

enum class FactorOrder { AsGiven, Swapped };

// Names the BI module V(1) of L_m^delta x L_n^epsilon (AsGiven) or
// L_n^delta x L_m^epsilon (Swapped), m <= n, m+n odd, without building
// any matrices: the base case L_m^+ x L_n^+ is
//   m even: O_m((n+1)/2, -(m+1)/2, -(n+1)/2)
//   m odd:  E_m((n+1)/2, (m+1)/2, (n+1)/2)^(-1,1)
// and every other variant differs from it by the {+-1}^2 twist
// (delta*epsilon, +1 for AsGiven / -1 for Swapped). For even m the
// composed twist is absorbed into the parameters; for odd m it stays in
// the twist field. Throws std::invalid_argument unless m <= n, m+n odd,
// and delta, epsilon are +-1.
BIModuleParams identify_v1(unsigned m, unsigned n, int delta, int epsilon,
                           FactorOrder order);

}  // namespace skewbi
