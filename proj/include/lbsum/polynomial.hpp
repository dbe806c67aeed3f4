#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lbsum/rational.hpp"

namespace lbsum {

/// Dense univariate polynomial over Rational, ascending coefficient order
/// (coefficient of x^i at index i). Canonical form keeps the top stored
/// coefficient nonzero; the zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> ascending)
      : coeffs_(ascending) { trim(); }
  explicit Polynomial(std::vector<Rational> ascending)
      : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial constant(Rational c);
  /// c * x^d
  static Polynomial monomial(int d, Rational c = Rational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the stored degree.
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  /// Horner evaluation; exact.
  Rational eval(const Rational& x) const;

  /// q with q(x) = p(x + c).
  Polynomial shifted(const Rational& c) const;

  Polynomial derivative() const;

  /// Monic normalization (leading coefficient 1); zero stays zero.
  Polynomial monic() const;

  /// True iff gcd(p, p') is a nonzero constant. Throws Errc::zero_polynomial
  /// for the zero polynomial.
  bool is_squarefree() const;

  /// Euclidean gcd with monic normalization at each step; result is monic
  /// (or zero when both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Quotient/remainder with deg(rem) < deg(divisor). Divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divrem(const Polynomial& num, const Polynomial& div);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { a *= b; return a; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { a *= c; return a; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { a *= c; return a; }
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form, descending powers, e.g. "n^2 - 3/2*n + 1".
  std::string str(std::string_view var = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace lbsum
