#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace nilcarnot {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator; every arithmetic path in the library goes through this type,
/// so no rounding happens anywhere.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument
  /// on malformed input or zero denominator.
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

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

  /// Integer power; e >= 0, or e < 0 with nonzero base.
  Rational pow(long e) const;

  /// Largest integer <= value.
  mpz_class floor() const;

  /// True if the value is the square of a rational (both num and den are
  /// perfect squares); if so *root is set to the nonnegative square root.
  bool is_perfect_square(Rational* root = nullptr) const;

  /// Lowest-terms decimal string, "p/q" or "p".
  std::string str() const;

  /// Only for diagnostics (growth-exponent estimates); never feeds back into
  /// algebraic computation.
  double to_double() const { return v_.get_d(); }

  std::size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace nilcarnot

template <>
struct std::hash<nilcarnot::Rational> {
  std::size_t operator()(const nilcarnot::Rational& r) const { return r.hash(); }
};
