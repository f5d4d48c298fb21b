#ifndef SYZ_RATIONAL_HPP
#define SYZ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <compare>
#include <string>

namespace syz {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form (gcd(|num|, den) = 1, den >= 1).
/// All coordinates in the library are rationals; there is no floating-point
/// computation path anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(Int(n)) {}  // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}      // NOLINT
  Rational(const Int& num, const Int& den) : v_(num, den) {}
  Rational(long long num, long long den) : v_(Int(num), Int(den)) {}

  /// Parses "p/q" or "p". Throws ParseError on anything else.
  static Rational parse(const std::string& text);

  Int numerator() const { return v_.numerator(); }
  Int denominator() const { return v_.denominator(); }

  bool is_integer() const { return v_.denominator() == 1; }

  /// Largest integer <= *this.
  Int floor() const;

  std::string str() const;

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(const boost::rational<Int>& v) : v_(v) {}
  boost::rational<Int> v_;
};

/// Residue class representative in [0, 1).
class Mod1 {
 public:
  Mod1() = default;
  static Mod1 normalize(const Rational& q) { return Mod1(q - Rational(q.floor())); }

  const Rational& value() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const Mod1& a, const Mod1& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Mod1& a, const Mod1& b) { return a.value_ != b.value_; }
  friend bool operator<(const Mod1& a, const Mod1& b) { return a.value_ < b.value_; }

  friend Mod1 operator+(const Mod1& a, const Mod1& b) {
    return normalize(a.value_ + b.value_);
  }

 private:
  explicit Mod1(const Rational& v) : value_(v) {}
  Rational value_;
};

inline Mod1 normalize(const Rational& q) { return Mod1::normalize(q); }

}  // namespace syz

#endif
