#pragma once

#include <cstdint>
#include <vector>

#include "skewbi/bannaiito.hpp"
#include "skewbi/sl2modules.hpp"
#include "skewbi/v1functor.hpp"

namespace skewbi {

// Odd graph on the d-subsets of a (2d+1)-set, adjacency = disjointness.
// Vertices are enumerated colexicographically, i.e. by increasing
// characteristic bitmask.
struct OddGraph {
  unsigned d = 0;
  std::vector<std::uint32_t> vertices;  // bitmasks over {0,...,2d}
  Matrix A;                             // adjacency, symmetric 0/1
};

// Throws std::invalid_argument unless 1 <= d <= 5.
OddGraph build_odd_graph(unsigned d);

// Dual adjacency matrix with respect to the base vertex g.vertices[x0]:
// diagonal, entry 2d - (2d+1)/(d+1) * |x0 symdiff x| at vertex x.
// Throws std::out_of_range for a bad index.
Matrix dual_adjacency(const OddGraph& g, std::size_t x0);

// Images of the generators in the Terwilliger algebra T(x0):
//   X -> A
//   Y -> (d+1)/(2d+1) A* + 1/(2(2d+1))
//   Z -> (d+1)/(2d+1) {A, A*} + A/(2d+1)
BITriple terwilliger_images(const OddGraph& g, std::size_t x0);

// Exact relation checks certifying the homomorphism: {X,Y} = Z,
// {Y,Z} = X, and {Z,X} - Y central (commutes with X, Y, Z; it is not
// scalar on the full standard module). Failures are recorded, not thrown.
RelationReport verify_homomorphism(const BITriple& t);

// Comparison of the combinatorial operators with the V(1) construction:
// the standard module C^{vertices} is carried into the weight-1 subspace
// of C^{2^(Omega minus x0)} x C^{2^(x0)} by x -> (x minus x0) x (x cap x0),
// and the restricted X, Y, Z must equal the Terwilliger images entrywise.
struct MatchReport {
  std::size_t v1_dim = 0;   // must be C(2d+1, d)
  bool x_matches = false;
  bool y_matches = false;
  bool z_matches = false;
  bool closure_ok = false;  // operator images stay in the vertex span

  bool all_pass() const {
    return x_matches && y_matches && z_matches && closure_ok;
  }
};

MatchReport match_with_v1(unsigned d, std::size_t x0);

// One isomorphism class of irreducible summands of the standard module:
// a pair of factor irreducibles with joint multiplicity, the predicted
// name of its V(1), and the observed data from the matrices.
struct SummandReport {
  IrrLabel left, right;     // factor summands (Omega minus x0 side first)
  unsigned multiplicity = 0;
  std::size_t dim = 0;      // dim of V(1) = min(left.n, right.n) + 1
  FactorOrder order = FactorOrder::AsGiven;
  BIModuleParams predicted;
  Identification observed;
  bool identification_consistent = false;
  std::vector<std::pair<Rational, std::size_t>> spectrum_x, spectrum_y,
      spectrum_z;
  bool leonard = false;
};

struct DecompositionReport {
  unsigned d = 0;
  std::size_t base_index = 0;
  std::uint32_t base_mask = 0;
  std::vector<SummandReport> summands;  // ordered by (dim, labels)
  std::size_t total_dim = 0;            // sum of multiplicity * dim
  bool dimension_ok = false;            // total_dim == C(2d+1, d)
  std::vector<std::pair<Rational, std::size_t>> adjacency_spectrum;
  bool spectrum_partition_ok = false;   // union of X spectra == spec(A)
};

// Full irreducible decomposition of the standard module: decompose both
// powerset factors into irreducibles, pair the summands, take V(1) of
// each pair (zero when the parities agree), name and certify each piece.
// Throws std::invalid_argument for d > 5.
DecompositionReport decompose_standard_module(unsigned d, std::size_t x0);

// Exact spectrum of a symmetric matrix whose eigenvalues are known to lie
// in `candidates`: verifies that prod(m - c) annihilates and reads off
// multiplicities as rank defects. Returns empty on failure to annihilate.
std::vector<std::pair<Rational, std::size_t>> spectrum_from_candidates(
    const Matrix& m, const std::vector<Rational>& candidates);

}  // namespace skewbi
