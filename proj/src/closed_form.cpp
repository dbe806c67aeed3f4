#include "lbsum/closed_form.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lbsum {

int ClosedForm::max_tuple_degree() const {
  int d = -1;
  for (const auto& p : tuple) d = std::max(d, p.degree());
  return d;
}

void require_valid_shift(const Recurrence& rec, std::int64_t h) {
  const ShiftValidity v = rec.check_shift(h);
  if (v.ok()) return;
  std::string msg = "shift h=" + std::to_string(h) + " rejected: ";
  if (!v.distinct_powers) msg += "h-th powers of roots are not distinct";
  if (!v.distinct_powers && !v.no_power_is_one) msg += "; ";
  if (!v.no_power_is_one) msg += "h-th powers of roots equal 1";
  throw Error(Errc::invalid_shift, msg);
}

Matrix build_matrix(int d, const StepSymmetrics& sym, std::size_t m) {
  if (d < 0) throw Error(Errc::shape_mismatch, "weight degree must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  // S_t = sum_i e_i * (m+1-i)^t; S_0 - 1 is the common diagonal entry.
  std::vector<Rational> s(n);
  for (std::size_t i = 1; i <= m; ++i) {
    Rational base(static_cast<long>(m + 1 - i));
    Rational power(1);
    for (std::size_t t = 0; t < n; ++t) {
      s[t] += sym.at(i) * power;
      power *= base;
    }
  }
  const Rational diagonal = s[0] - Rational(1);
  if (diagonal.is_zero())
    throw Error(Errc::invalid_shift, "shift rejected: h-th powers of roots equal 1");

  Matrix out(n, n);
  for (std::size_t i1 = 1; i1 <= n; ++i1) {
    out.at(i1, i1) = diagonal;
    for (std::size_t i2 = i1 + 1;i2 <= n; ++i2)
      out.at(i1, i2) = Rational(binomial(i2 - 1, i1 - 1)) * s[i2 - i1];
  }
  return out;
}

DeltaVector solve_deltas(int d, const StepSymmetrics& sym, std::size_t m) {
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  std::vector<Rational> rhs(n);
  for (std::size_t i = 1; i <= n; ++i) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(n - i));
    rhs[i - 1] = Rational(binomial(static_cast<unsigned long>(d), i - 1) * p);
  }
  DeltaVector dv;
  dv.d = d;
  dv.delta = upper_tri_solve(build_matrix(d, sym, m), rhs);
  return dv;
}

ClosedForm monomial_tuple(const Recurrence& rec, int d, ShiftParams shift) {
  require_valid_shift(rec, shift.h);
  const std::size_t m = rec.order();
  const StepSymmetrics sym = rec.step_symmetrics(shift.h);

  std::vector<Polynomial> tuple(m + 1);
  tuple[m - 1] = Polynomial(solve_deltas(d, sym, m).delta);
  const Polynomial& top = tuple[m - 1];
  for (std::size_t k = 1; k + 1 <= m; ++k) {
    Polynomial p = top.shifted(Rational(-static_cast<long>(m - k)));
    for (std::size_t i = k + 1; i <= m; ++i)
      p -= sym.at(i) * top.shifted(Rational(static_cast<long>(k + 1) - static_cast<long>(i)));
    tuple[k - 1] = std::move(p);
  }
  Rational tail = rec.term_fast(shift.h + shift.r);
  for (std::size_t i = 1; i <= m; ++i)
    tail -= tuple[i - 1].eval(Rational(1)) *
            rec.term_fast(static_cast<std::int64_t>(i + 1) * shift.h + shift.r);
  tuple[m] = Polynomial::constant(std::move(tail));

  return ClosedForm{rec, shift, Polynomial::monomial(d), std::move(tuple)};
}

ClosedForm general_tuple(const Recurrence& rec, const Polynomial& weight, ShiftParams shift) {
  require_valid_shift(rec, shift.h);
  std::vector<Polynomial> tuple(rec.order() + 1);
  for (int d = 0; d <= weight.degree(); ++d) {
    const Rational& c = weight.coeff(d);
    if (c.is_zero()) continue;
    const ClosedForm part = monomial_tuple(rec, d, shift);
    for (std::size_t k = 0; k < tuple.size(); ++k) tuple[k] += c * part.tuple[k];
  }
  return ClosedForm{rec, shift, weight, std::move(tuple)};
}

Rational eval_rhs(const ClosedForm& cf, std::int64_t n) {
  const std::size_t m = cf.order();
  const Rational n_value(n);
  Rational acc = cf.tuple[m].eval(n_value);
  for (std::size_t k = 1; k <= m; ++k)
    acc += cf.tuple[k - 1].eval(n_value) *
           cf.recurrence.term_fast((n + static_cast<std::int64_t>(k)) * cf.shift.h + cf.shift.r);
  return acc;
}

} // namespace lbsum
