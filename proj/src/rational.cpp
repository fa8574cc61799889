#include "skewbi/rational.hpp"

#include <stdexcept>

namespace skewbi {

std::string to_string(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  const auto check_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("malformed rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational literal");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed rational literal");
  };
  if (slash == std::string_view::npos) {
    check_int(text);
    return Rational(Integer(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rational(Integer(std::string(num)), d);
}

}  // namespace skewbi
