#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skewbi/rational.hpp"

namespace skewbi {

// PBW monomial E^i F^j H^k rho^h of the skew group ring; the canonical
// order E-before-F-before-H-before-rho is implicit in the fields.
struct PBWMonomial {
  unsigned i = 0;  // exponent of E
  unsigned j = 0;  // exponent of F
  unsigned k = 0;  // exponent of H
  unsigned h = 0;  // exponent of rho, in {0,1}

  auto operator<=>(const PBWMonomial&) const = default;
  unsigned degree() const { return i + j + k + h; }
};

enum class Gen : unsigned char { E, F, H, Rho };
using Word = std::vector<Gen>;

// Element of U(sl2) x| Z/2Z in PBW normal form: a finite rational-coefficient
// combination of PBW monomials. No zero coefficients are stored, so equality
// of term maps is equality in the algebra.
class RingElement {
 public:
  using TermMap = std::map<PBWMonomial, Rational>;

  RingElement() = default;
  explicit RingElement(const Rational& scalar);

  static RingElement generator(Gen g);
  static RingElement monomial(const PBWMonomial& m, const Rational& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const PBWMonomial& m, const Rational& coeff);

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator-() const;
  RingElement operator*(const Rational& scalar) const;
  bool operator==(const RingElement& other) const = default;

  friend RingElement operator*(const Rational& s, const RingElement& x) {
    return x * s;
  }

 private:
  TermMap terms_;
};

// PBW normal form of a word in the generators, by exhaustive rewriting with
//   FE -> EF - H,  HE -> EH + 2E,  HF -> FH - 2F,
//   rho E -> F rho,  rho F -> E rho,  rho H -> -H rho,  rho rho -> 1.
RingElement normal_form(const Word& word, const Rational& coeff = 1);

// Product in the algebra: concatenate PBW words termwise and renormalize.
RingElement multiply(const RingElement& x, const RingElement& y);

// Element of the tensor-square algebra, componentwise PBW-normal.
class TensorElement {
 public:
  using Key = std::pair<PBWMonomial, PBWMonomial>;
  using TermMap = std::map<Key, Rational>;

  TensorElement() = default;
  explicit TensorElement(const Rational& scalar);
  static TensorElement tensor(const RingElement& a, const RingElement& b);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Rational& coeff);

  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;
  TensorElement operator*(const TensorElement& other) const;
  bool operator==(const TensorElement& other) const = default;

 private:
  TermMap terms_;
};

// The comultiplication Delta, extended from the generators
//   Delta(u) = u x 1 + 1 x u  (u in {E,F,H}),   Delta(rho) = rho x rho
// as an algebra homomorphism.
TensorElement comultiply(const RingElement& x);

// The counit: eps(E) = eps(F) = eps(H) = 0, eps(rho) = 1.
Rational counit(const RingElement& x);

// The antipode: anti-automorphism with S(u) = -u for Lie generators and
// S(rho) = rho (rho is its own inverse).
RingElement antipode(const RingElement& x);

// Casimir element  Lambda = EF + FE + H^2/2  in normal form.
RingElement casimir();

std::string to_string(const PBWMonomial& m);
std::string to_string(const RingElement& x);
std::string to_string(const TensorElement& x);

// Parses the CLI expression grammar: words over tokens `E F H rho`,
// `*` concatenation, `+`, `-`, rational scalars, `^` integer powers and
// parentheses. Throws std::invalid_argument on malformed input.
RingElement parse_ring_element(std::string_view text);

}  // namespace skewbi
