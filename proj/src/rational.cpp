#include "lbsum/rational.hpp"

#include <cctype>
#include <ostream>

namespace lbsum {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_token(num_part) || !valid_integer_token(den_part))
    throw Error(Errc::parse_error, "invalid rational literal: '" + std::string(text) + "'");
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0)
    throw Error(Errc::parse_error, "zero denominator in rational literal: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base.is_zero()) {
    if (exponent < 0) throw Error(Errc::division_by_zero, "zero raised to negative power");
    return Rational(0);
  }
  mpz_class num, den;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
  return exponent > 0 ? Rational(num, den) : Rational(den, num);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

} // namespace lbsum
