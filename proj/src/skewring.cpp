#include "skewbi/skewring.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace skewbi {

RingElement::RingElement(const Rational& scalar) {
  if (scalar != 0) terms_[PBWMonomial{}] = scalar;
}

RingElement RingElement::generator(Gen g) {
  PBWMonomial m;
  switch (g) {
    case Gen::E: m.i = 1; break;
    case Gen::F: m.j = 1; break;
    case Gen::H: m.k = 1; break;
    case Gen::Rho: m.h = 1; break;
  }
  return monomial(m);
}

RingElement RingElement::monomial(const PBWMonomial& m, const Rational& coeff) {
  RingElement x;
  if (coeff != 0) x.terms_[m] = coeff;
  return x;
}

unsigned RingElement::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void RingElement::add_term(const PBWMonomial& m, const Rational& coeff) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

RingElement RingElement::operator+(const RingElement& other) const {
  RingElement r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

RingElement RingElement::operator-(const RingElement& other) const {
  RingElement r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

RingElement RingElement::operator*(const Rational& scalar) const {
  RingElement r;
  if (scalar == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * scalar;
  return r;
}

namespace {

Word monomial_word(const PBWMonomial& m) {
  Word w;
  w.reserve(m.degree());
  for (unsigned x = 0; x < m.i; ++x) w.push_back(Gen::E);
  for (unsigned x = 0; x < m.j; ++x) w.push_back(Gen::F);
  for (unsigned x = 0; x < m.k; ++x) w.push_back(Gen::H);
  for (unsigned x = 0; x < m.h; ++x) w.push_back(Gen::Rho);
  return w;
}

// Index of the first adjacent pair violating the E < F < H < rho order
// (a repeated rho also counts); npos when the word is already normal.
std::size_t first_inversion(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const auto a = static_cast<unsigned>(w[p]);
    const auto b = static_cast<unsigned>(w[p + 1]);
    if (a > b) return p;
    if (w[p] == Gen::Rho && w[p + 1] == Gen::Rho) return p;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

// Innermost-leftmost rewriting. Each rule application strictly decreases the
// measure (#rho letters left of a Lie letter, #(F,E)/(H,E)/(H,F) inversions,
// total degree) in lexicographic order, so the loop terminates:
//   rho-rules move a rho rightward or delete two rhos without creating Lie
//   inversions to their left; the three commutator rules remove one Lie
//   inversion and their lower-degree tails only shorten the word.
RingElement normal_form(const Word& word, const Rational& coeff) {
  RingElement result;
  std::vector<std::pair<Rational, Word>> pending;
  pending.emplace_back(coeff, word);
  while (!pending.empty()) {
    auto [c, w] = std::move(pending.back());
    pending.pop_back();
    const std::size_t p = first_inversion(w);
    if (p == static_cast<std::size_t>(-1)) {
      PBWMonomial m;
      for (Gen g : w) switch (g) {
          case Gen::E: ++m.i; break;
          case Gen::F: ++m.j; break;
          case Gen::H: ++m.k; break;
          case Gen::Rho: ++m.h; break;
        }
      result.add_term(m, c);
      continue;
    }
    const Gen a = w[p], b = w[p + 1];
    auto emit = [&](const Rational& factor, std::initializer_list<Gen> repl) {
      Word next;
      next.reserve(w.size() + repl.size());
      next.insert(next.end(), w.begin(), w.begin() + p);
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + p + 2, w.end());
      pending.emplace_back(c * factor, std::move(next));
    };
    if (a == Gen::F && b == Gen::E) {          // FE -> EF - H
      emit(1, {Gen::E, Gen::F});
      emit(-1, {Gen::H});
    } else if (a == Gen::H && b == Gen::E) {   // HE -> EH + 2E
      emit(1, {Gen::E, Gen::H});
      emit(2, {Gen::E});
    } else if (a == Gen::H && b == Gen::F) {   // HF -> FH - 2F
      emit(1, {Gen::F, Gen::H});
      emit(-2, {Gen::F});
    } else if (a == Gen::Rho && b == Gen::E) { // rho E -> F rho
      emit(1, {Gen::F, Gen::Rho});
    } else if (a == Gen::Rho && b == Gen::F) { // rho F -> E rho
      emit(1, {Gen::E, Gen::Rho});
    } else if (a == Gen::Rho && b == Gen::H) { // rho H -> -H rho
      emit(-1, {Gen::H, Gen::Rho});
    } else {                                   // rho rho -> 1
      emit(1, {});
    }
  }
  return result;
}

RingElement multiply(const RingElement& x, const RingElement& y) {
  RingElement result;
  for (const auto& [mx, cx] : x.terms()) {
    Word wx = monomial_word(mx);
    for (const auto& [my, cy] : y.terms()) {
      Word w = wx;
      const Word wy = monomial_word(my);
      w.insert(w.end(), wy.begin(), wy.end());
      result = result + normal_form(w, cx * cy);
    }
  }
  return result;
}

TensorElement::TensorElement(const Rational& scalar) {
  if (scalar != 0) terms_[{PBWMonomial{}, PBWMonomial{}}] = scalar;
}

TensorElement TensorElement::tensor(const RingElement& a, const RingElement& b) {
  TensorElement t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
  return t;
}

void TensorElement::add_term(const Key& k, const Rational& coeff) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(k, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  TensorElement r = *this;
  for (const auto& [k, c] : other.terms_) r.add_term(k, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  TensorElement r = *this;
  for (const auto& [k, c] : other.terms_) r.add_term(k, -c);
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& other) const {
  TensorElement r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : other.terms_) {
      const RingElement left =
          multiply(RingElement::monomial(ka.first), RingElement::monomial(kb.first));
      const RingElement right =
          multiply(RingElement::monomial(ka.second), RingElement::monomial(kb.second));
      const Rational c = ca * cb;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms())
          r.add_term({ml, mr}, c * cl * cr);
    }
  return r;
}

TensorElement comultiply(const RingElement& x) {
  const TensorElement one(1);
  auto delta_gen = [&](Gen g) {
    const RingElement u = RingElement::generator(g);
    if (g == Gen::Rho) return TensorElement::tensor(u, u);
    return TensorElement::tensor(u, RingElement(1)) +
           TensorElement::tensor(RingElement(1), u);
  };
  TensorElement result;
  for (const auto& [m, c] : x.terms()) {
    TensorElement t(c);
    for (Gen g : monomial_word(m)) t = t * delta_gen(g);
    result = result + t;
  }
  return result;
}

Rational counit(const RingElement& x) {
  Rational s = 0;
  for (const auto& [m, c] : x.terms())
    if (m.i == 0 && m.j == 0 && m.k == 0) s += c;
  return s;
}

RingElement antipode(const RingElement& x) {
  RingElement result;
  for (const auto& [m, c] : x.terms()) {
    // S reverses the factors; S(E) = -E, S(F) = -F, S(H) = -H, S(rho) = rho.
    Word w;
    w.reserve(m.degree());
    for (unsigned t = 0; t < m.h; ++t) w.push_back(Gen::Rho);
    for (unsigned t = 0; t < m.k; ++t) w.push_back(Gen::H);
    for (unsigned t = 0; t < m.j; ++t) w.push_back(Gen::F);
    for (unsigned t = 0; t < m.i; ++t) w.push_back(Gen::E);
    const Rational sign = ((m.i + m.j + m.k) % 2 == 0) ? 1 : -1;
    result = result + normal_form(w, c * sign);
  }
  return result;
}

RingElement casimir() {
  const RingElement e = RingElement::generator(Gen::E);
  const RingElement f = RingElement::generator(Gen::F);
  const RingElement h = RingElement::generator(Gen::H);
  return multiply(e, f) + multiply(f, e) +
         multiply(h, h) * Rational(1, 2);
}

std::string to_string(const PBWMonomial& m) {
  if (m.degree() == 0) return "1";
  std::string s;
  auto append = [&](const char* name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  append("E", m.i);
  append("F", m.j);
  append("H", m.k);
  append("rho", m.h);
  return s;
}

std::string to_string(const RingElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : x.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const std::string ms = to_string(m);
    if (mag == 1 && ms != "1") {
      s += ms;
    } else if (ms == "1") {
      s += to_string(mag);
    } else {
      s += to_string(mag) + " " + ms;
    }
  }
  return s;
}

std::string to_string(const TensorElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag) + " ";
    s += "(" + to_string(k.first) + ")x(" + to_string(k.second) + ")";
  }
  return s;
}

namespace {

// Recursive-descent parser for the CLI expression grammar.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingElement parse() {
    RingElement x = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw std::invalid_argument("trailing input in expression");
    return x;
  }

 private:
  RingElement expr() {
    RingElement acc = term();
    while (true) {
      skip_ws();
      if (consume('+')) {
        acc = acc + term();
      } else if (consume('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RingElement term() {
    RingElement acc = factor();
    while (true) {
      skip_ws();
      if (!consume('*')) return acc;
      acc = multiply(acc, factor());
    }
  }

  RingElement factor() {
    skip_ws();
    if (consume('-')) return -factor();
    if (consume('(')) {
      RingElement x = expr();
      skip_ws();
      if (!consume(')')) throw std::invalid_argument("missing ')'");
      return power_suffix(x);
    }
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      return power_suffix(RingElement(number()));
    }
    if (match_word("rho"))
      return power_suffix(RingElement::generator(Gen::Rho));
    if (match_word("E")) return power_suffix(RingElement::generator(Gen::E));
    if (match_word("F")) return power_suffix(RingElement::generator(Gen::F));
    if (match_word("H")) return power_suffix(RingElement::generator(Gen::H));
    throw std::invalid_argument("expected a generator, scalar or '('");
  }

  RingElement power_suffix(RingElement base) {
    skip_ws();
    if (!consume('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw std::invalid_argument("expected exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    RingElement acc{Rational(1)};
    for (long t = 0; t < e; ++t) acc = multiply(acc, base);
    return acc;
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '/'))
      ++pos_;
    return parse_rational(text_.substr(start, pos_ - start));
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[end])) && w.size() > 1)
      return false;
    pos_ = end;
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_element(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace skewbi
