#include "syz/rational.hpp"

#include <cctype>

#include "syz/errors.hpp"

namespace syz {

namespace {

bool parse_integer(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = Int(s);
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  Int num, den;
  if (slash == std::string::npos) {
    if (!parse_integer(text, num)) {
      throw ParseError("not a rational: '" + text + "'");
    }
    return Rational(num);
  }
  if (!parse_integer(text.substr(0, slash), num) ||
      !parse_integer(text.substr(slash + 1), den)) {
    throw ParseError("not a rational: '" + text + "'");
  }
  if (den == 0) throw ParseError("zero denominator: '" + text + "'");
  return Rational(num, den);
}

Int Rational::floor() const {
  Int q = numerator() / denominator();
  if (numerator() < 0 && q * denominator() != numerator()) --q;
  return q;
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (denominator() != 1) s += "/" + denominator().str();
  return s;
}

}  // namespace syz
