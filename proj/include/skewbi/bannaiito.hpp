#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewbi/matrix.hpp"

namespace skewbi {

// Three square matrices intended to realize the universal Bannai-Ito
// relations; no invariants are imposed at construction, the point is to
// test them. kappa = {X,Y}-Z, lambda = {Y,Z}-X, mu = {Z,X}-Y are derived
// on demand.
struct BITriple {
  Matrix X, Y, Z;

  std::size_t dim() const { return X.rows(); }
};

enum class Parity { Odd, Even };  // Odd: dim n+1 odd (n even); Even: n odd

// Sign pair of the {+-1}^2 twist action; (+,+) is the identity.
struct TwistPair {
  int eps = +1;
  int eps_prime = +1;

  auto operator<=>(const TwistPair&) const = default;
};

struct BIModuleParams {
  Parity parity = Parity::Odd;
  unsigned n = 0;
  Rational a, b, c;
  TwistPair twist;  // Even only; Odd modules use (+,+)

  auto operator<=>(const BIModuleParams&) const = default;
};

std::string to_string(const BIModuleParams& p);

// The concrete module O_n(a,b,c) (n even) or E_n(a,b,c) (n odd) followed by
// the requested twist: X lower bidiagonal (diag theta_i, subdiagonal 1),
// Y upper bidiagonal (diag theta*_i, superdiagonal phi_i),
// Z = {X,Y} - kappa I with kappa the module's scalar. Throws
// std::invalid_argument on parity/n mismatch.
BITriple build_bi_module(const BIModuleParams& p);

// (kappa, lambda, mu) = ({X,Y}-Z, {Y,Z}-X, {Z,X}-Y).
struct CentralElements {
  Matrix kappa, lambda, mu;
};
CentralElements central_elements(const BITriple& t);

// Casimir element X^2 + Y^2 + Z^2.
Matrix bi_casimir(const BITriple& t);

// The {+-1}^2 action: (1,-1): (X,-Y,-Z); (-1,1): (-X,Y,-Z); (-1,-1): (-X,-Y,Z).
BITriple twist(const BITriple& t, const TwistPair& g);

// The Z/3Z action: 1 mod 3 cycles (X,Y,Z) -> (Y,Z,X).
BITriple twist_cyclic(const BITriple& t, unsigned g_mod_3);

// Scalar kappa/lambda/mu values of the module with parameters p (before the
// twist): O_n: (2ab-c(n+1), 2bc-a(n+1), 2ca-b(n+1)); E_n uses the
// squares-and-(n+1)/2 formulas.
struct ScalarCentrals {
  Rational kappa, lambda, mu;
};
ScalarCentrals module_central_scalars(const BIModuleParams& p);

// Irreducibility criterion in terms of the parameters:
// Odd: a+b+c, a-b-c, -a+b-c, -a-b+c avoid {(n+1)/2 - i : i = 2,4,...,n};
// Even: a+b+c, -a+b+c, a-b+c, a+b-c avoid {(n-1)/2 - i : i = 0,2,...,n-1}.
bool is_irreducible_params(const BIModuleParams& p);

// Burnside certificate: true iff the span of all words in X,Y,Z has
// dimension dim^2.
bool is_irreducible_matrix(const BITriple& t);

// Identification of an irreducible triple.
// Odd dimension: traces of X,Y,Z give (a,b,c) directly.
// Even dimension: the twist is read from the signs of trace(X), trace(Y)
// against -(n+1)/2; a^2, b^2, c^2 are recovered from the scalar values of
// kappa, lambda, mu on the twisted triple (a_sq etc. below). Square roots
// are never chosen.
struct Identification {
  Parity parity = Parity::Odd;
  unsigned n = 0;
  TwistPair twist;
  // Odd: the parameters themselves. Even: unset.
  std::optional<Rational> a, b, c;
  // Even: the squares. Odd: unset.
  std::optional<Rational> a_sq, b_sq, c_sq;
};

// Whether an observed identification names the module with parameters p:
// odd dimension compares (a,b,c) directly, even dimension compares the
// twist and the squares.
bool identification_consistent(const BIModuleParams& p,
                               const Identification& observed);

// Throws std::domain_error (NotScalar) when kappa/lambda/mu are not scalar,
// signalling non-irreducible input. The even-dimensional ZeroTrace corner
// (trace 0, twist undeterminable) cannot occur for modules in scope since
// -(n+1)/2 != 0, but is reported via std::domain_error defensively.
Identification identify_irreducible(const BITriple& t);

// Leonard-triple predictor (irreducible parameters required, else throws):
// true iff a, b, c avoid {(n-1)/2 - i : i = 0,1,...,n-1}.
bool leonard_predict(const BIModuleParams& p);

struct OperatorDiagnostics {
  std::string name;
  std::vector<std::pair<Rational, std::size_t>> eigenvalues;  // with multiplicities
  bool rational_spectrum = false;
  bool diagonalizable = false;
  bool simple_spectrum = false;
  bool path_ordering_found = false;
  // Irreducible-tridiagonal flags for the other two operators in the
  // ordered eigenbasis of this one.
  bool first_other_tridiagonal = false;
  bool second_other_tridiagonal = false;
};

struct LeonardVerdict {
  bool is_leonard = false;
  std::vector<OperatorDiagnostics> per_operator;
};

// Exact Leonard-triple check: rational eigenvalues, diagonalizability,
// simple spectrum, and for each operator an eigenbasis ordering in which
// the other two are irreducible tridiagonal. Throws std::domain_error
// (IrrationalSpectrum) when a characteristic polynomial has a non-rational
// root; a repeated eigenvalue yields is_leonard = false with diagnostics.
LeonardVerdict leonard_check(const BITriple& t);

}  // namespace skewbi
