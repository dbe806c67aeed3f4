#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "lbsum/errors.hpp"

namespace lbsum {

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0,
/// zero stored as 0/1. All arithmetic is exact; division by zero throws.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" with optional leading sign. Throws Errc::parse_error.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

private:
  mpq_class v_;
};

Rational pow(const Rational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer (0 for k < 0 or k > n).
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace lbsum
