#include "lbsum/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace lbsum {

namespace {
const Rational kZero{};
} // namespace

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

Polynomial Polynomial::monomial(int d, Rational c) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(d) + 1, Rational(0));
  p.coeffs_.back() = std::move(c);
  return p;
}

const Rational& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw Error(Errc::zero_polynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  // Horner in the polynomial ring: q := q*(x + c) + p_i, top down.
  std::vector<Rational> q;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    q.push_back(Rational(0));
    for (std::size_t j = q.size() - 1; j > 0; --j) q[j] = q[j - 1] + c * q[j];
    q[0] = c * q[0] + *it;
  }
  return Polynomial(std::move(q));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial p = *this;
  const Rational lead = p.coeffs_.back();
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& num, const Polynomial& div) {
  if (div.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (num.degree() < div.degree()) return {Polynomial{}, num};
  std::vector<Rational> rem = num.coeffs_;
  std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - div.degree()) + 1);
  const Rational& lead = div.coeffs_.back();
  for (int k = num.degree() - div.degree(); k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + div.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= div.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * div.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  // Remainders are normalized to monic at each step to keep coefficients small.
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Polynomial r = divrem(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool Polynomial::is_squarefree() const {
  if (is_zero()) throw Error(Errc::zero_polynomial, "squarefree test on zero polynomial");
  if (is_constant()) return true;
  return gcd(*this, derivative()).degree() == 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string Polynomial::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (i == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

} // namespace lbsum
