#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewbi/matrix.hpp"
#include "skewbi/skewring.hpp"

namespace skewbi {

// Label of the irreducible module L_n^sign; distinct labels are
// non-isomorphic.
struct IrrLabel {
  unsigned n = 0;
  int sign = +1;  // +1 or -1

  auto operator<=>(const IrrLabel&) const = default;
};

std::string to_string(const IrrLabel& label);

// A matrix representation of the skew group ring: exact generator matrices
// on a labeled basis. When has_rho is false the representation is a plain
// U(sl2)-module and the rho matrix is ignored.
struct Representation {
  std::size_t dim = 0;
  Matrix E, F, H, rho;
  std::vector<std::string> basis_labels;
  bool has_rho = true;
};

// The (n+1)-dimensional irreducible:  E v_i = i v_{i-1},
// F v_i = (n-i) v_{i+1},  H v_i = (n-2i) v_i,  rho v_i = sign * v_{n-i}.
Representation build_irreducible(const IrrLabel& label);

// Evaluation homomorphism: substitute the generator matrices into each PBW
// monomial and extend linearly.
Matrix act(const Representation& rep, const RingElement& x);

struct RelationReport {
  struct Entry {
    std::string relation;
    bool holds = false;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};

// Exact matrix identity checks for the six defining relations
// HE-EH=2E, HF-FH=-2F, EF-FE=H, rho H + H rho = 0, rho E - F rho = 0,
// rho^2 = I (the rho relations are skipped when has_rho is false).
RelationReport verify_defining_relations(const Representation& rep);

// Kronecker-product realization of a tensor-square module.
struct TensorRepresentation {
  Representation left;
  Representation right;

  std::size_t dim() const { return left.dim * right.dim; }

  // Evaluates u x v as act(left,u) (x) act(right,v), extended linearly.
  Matrix apply(const TensorElement& t) const;
  // Evaluates Delta(u).
  Matrix apply_delta(const RingElement& u) const;
};

TensorRepresentation tensor_rep(const Representation& a, const Representation& b);

// Clebsch--Gordan embedding L_{m+n-2p} -> L_m (x) L_n. Column k is the image
// of v_k, built by applying Delta(F) to the top vector
// sum (-1)^i C(p,i) v_i (x) v_{p-i} and dividing by the falling factorial
// N(N-1)...(N-k+1), N = m+n-2p. Throws std::invalid_argument when p is out
// of range.
Matrix cg_embedding(unsigned m, unsigned n, unsigned p);

struct CGSummand {
  IrrLabel label;
  Matrix embedding;  // columns: embedded basis inside the tensor module
};

// Decomposition L_m^delta (x) L_n^eps = sum_p L_{m+n-2p}^{(-1)^p delta eps}.
// Each summand's rho-sign is verified on extremal vectors against
// Delta(rho) applied to the embedding; a mismatch throws std::logic_error
// (it would signal a bug, not a mathematical possibility).
std::vector<CGSummand> cg_decompose(const IrrLabel& a, const IrrLabel& b);

// The 2^|Omega|-dimensional module on the subset basis:
// E x = sum of subsets covered by x, F x = sum of subsets covering x,
// H x = (|Omega|-2|x|) x, rho x = complement of x. Subsets are enumerated
// in binary-counter order on characteristic vectors. Throws
// std::invalid_argument above the desk-scale cap (|Omega| <= 16).
Representation powerset_rep(unsigned omega_size);

// Permutation matrix x -> (x \ x0) (x) (x ^ x0) identifying C^{2^Omega} with
// C^{2^{Omega\x0}} (x) C^{2^{x0}}; x0 given as a bitmask over the ground set.
Matrix iota_intertwiner(unsigned omega_size, std::uint32_t x0);

struct IsotypicComponent {
  IrrLabel label;
  unsigned multiplicity = 0;
  // Highest-weight vectors spanning the multiplicity space, as columns in
  // the ambient module.
  Matrix highest_weight_vectors;
};

// Multiplicity formula (|Omega|-2i+1)/(|Omega|-i+1) * C(|Omega|,i) for the
// summand L_{|Omega|-2i}^{(-1)^i}, cross-checked against the computed
// isotypic dimensions of powerset_rep.
std::vector<std::pair<IrrLabel, unsigned>> powerset_decompose(unsigned omega_size);

// Isotypic data of an arbitrary representation computed from joint
// (H-weight, E-kernel, rho-sign) information. The rho-sign of a
// highest-weight vector v of weight n is read off from E^n(rho v)/n! = sign*v.
std::vector<IsotypicComponent> isotypic_components(const Representation& rep);

// Basis of the copy of L_n generated by a highest-weight vector v:
// column k is F^k v / (n falling k), matching the L_n basis normalization.
Matrix lowering_basis(const Representation& rep, const Matrix& v, unsigned n);

}  // namespace skewbi
