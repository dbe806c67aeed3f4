#include "lbsum/recurrence.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace lbsum {

namespace detail {

LinearSequence::LinearSequence(std::vector<Rational> coefficients, std::vector<Rational> window,
                               std::int64_t base)
    : a_(std::move(coefficients)), window_(std::move(window)), base_(base) {
  if (a_.size() != window_.size() || a_.empty())
    throw Error(Errc::shape_mismatch, "sequence window must match recurrence order");
  if (a_.front().is_zero())
    throw Error(Errc::zero_a1, "backward extension requires a nonzero trailing coefficient");
}

Rational LinearSequence::at(std::int64_t k) const {
  const std::int64_t m = static_cast<std::int64_t>(a_.size());
  if (k >= base_ && k < base_ + m) return window_[static_cast<std::size_t>(k - base_)];

  std::vector<Rational> w = window_;
  if (k >= base_ + m) {
    for (std::int64_t idx = base_ + m; idx <= k; ++idx) {
      Rational next;
      for (std::size_t i = 0; i < a_.size(); ++i) next += a_[i] * w[i];
      std::rotate(w.begin(), w.begin() + 1, w.end());
      w.back() = std::move(next);
    }
    return w.back();
  }
  // v_k = (v_{k+m} - a_m v_{k+m-1} - ... - a_2 v_{k+1}) / a_1
  for (std::int64_t idx = base_ - 1; idx >= k; --idx) {
    Rational acc = w[w.size() - 1];
    for (std::size_t i = 1; i < a_.size(); ++i) acc -= a_[i] * w[i - 1];
    std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
    w.front() = acc / a_[0];
  }
  return w.front();
}

namespace {

Matrix companion(const std::vector<Rational>& a) {
  const std::size_t m = a.size();
  Matrix c(m, m);
  for (std::size_t i = 1; i < m; ++i) c.at(i, i + 1) = Rational(1);
  for (std::size_t j = 1; j <= m; ++j) c.at(m, j) = a[j - 1];
  return c;
}

Matrix inverse_companion(const std::vector<Rational>& a) {
  // Maps the window starting at k+1 to the window starting at k.
  const std::size_t m = a.size();
  Matrix c(m, m);
  c.at(1, m) = Rational(1) / a[0];
  for (std::size_t j = 1; j < m; ++j) c.at(1, j) = -a[j] / a[0];
  for (std::size_t i = 2; i <= m; ++i) c.at(i, i - 1) = Rational(1);
  return c;
}

Matrix matrix_power(Matrix base, std::uint64_t e) {
  Matrix acc = Matrix::identity(base.rows());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

} // namespace

Rational LinearSequence::at_fast(std::int64_t k) const {
  const std::int64_t m = static_cast<std::int64_t>(a_.size());
  if (k >= base_ && k < base_ + m) return window_[static_cast<std::size_t>(k - base_)];
  const bool forward = k >= base_;
  const Matrix step = forward ? companion(a_) : inverse_companion(a_);
  const std::uint64_t dist = static_cast<std::uint64_t>(forward ? k - (base_ + m - 1) : base_ - k);
  const std::vector<Rational> w = matrix_power(step, dist).mul(window_);
  return forward ? w.back() : w.front();
}

} // namespace detail

std::size_t berlekamp_massey_length(const std::vector<Rational>& terms) {
  std::vector<Rational> cur{Rational(1)}; // connection polynomial, cur[0] = 1
  std::vector<Rational> prev{Rational(1)};
  Rational prev_discrepancy(1);
  std::size_t length = 0;
  std::size_t gap = 1; // terms since the last length change
  for (std::size_t n = 0; n < terms.size(); ++n) {
    Rational d = terms[n];
    for (std::size_t i = 1; i <= length; ++i) d += cur[i] * terms[n - i];
    if (d.is_zero()) {
      ++gap;
      continue;
    }
    const std::vector<Rational> snapshot = cur;
    const Rational factor = d / prev_discrepancy;
    if (cur.size() < prev.size() + gap) cur.resize(prev.size() + gap);
    for (std::size_t i = 0; i < prev.size(); ++i) cur[i + gap] -= factor * prev[i];
    if (2 * length <= n) {
      length = n + 1 - length;
      prev = snapshot;
      prev_discrepancy = d;
      gap = 1;
    } else {
      ++gap;
    }
  }
  return length;
}

Recurrence Recurrence::validate(std::size_t order, std::vector<Rational> coefficients,
                                std::vector<Rational> initial) {
  if (order < 2)
    throw Error(Errc::order_too_small, "recurrence order must be at least 2");
  if (coefficients.size() != order || initial.size() != order)
    throw Error(Errc::shape_mismatch, "coefficients and initial terms must both have length equal to the order");
  if (coefficients.front().is_zero())
    throw Error(Errc::zero_a1, "a_1 must be nonzero");
  if (std::all_of(initial.begin(), initial.end(), [](const Rational& s) { return s.is_zero(); }))
    throw Error(Errc::all_initial_zero, "initial terms must not be simultaneously zero");

  Recurrence rec(order, std::move(coefficients), std::move(initial));
  if (!rec.characteristic_polynomial().is_squarefree())
    throw Error(Errc::repeated_roots, "characteristic polynomial has repeated roots");

  std::vector<Rational> window(2 * order);
  for (std::size_t k = 1; k <= 2 * order; ++k)
    window[k - 1] = rec.term(static_cast<std::int64_t>(k));
  const std::size_t minimal = berlekamp_massey_length(window);
  if (minimal < order)
    throw Error(Errc::not_minimal,
                "sequence already satisfies a recurrence of order " + std::to_string(minimal) +
                    " < " + std::to_string(order));
  return rec;
}

Polynomial Recurrence::characteristic_polynomial() const {
  std::vector<Rational> c(m_ + 1);
  for (std::size_t i = 0; i < m_; ++i) c[i] = -a_[i];
  c[m_] = Rational(1);
  return Polynomial(std::move(c));
}

Rational Recurrence::term(std::int64_t k) const {
  return detail::LinearSequence(a_, s_, 1).at(k);
}

Rational Recurrence::term_fast(std::int64_t k) const {
  return detail::LinearSequence(a_, s_, 1).at_fast(k);
}

std::vector<Rational> Recurrence::power_sums(std::int64_t step) const {
  if (step == 0) throw Error(Errc::zero_shift, "step must be nonzero");
  // Newton's identities on the characteristic coefficients give p_1..p_m.
  // With eps_k the k-th elementary symmetric function of the roots,
  // eps_k = (-1)^{k+1} a_{m+1-k}.
  std::vector<Rational> eps(m_ + 1);
  eps[0] = Rational(1);
  for (std::size_t k = 1; k <= m_; ++k) {
    eps[k] = a_[m_ - k];
    if (k % 2 == 0) eps[k] = -eps[k];
  }
  std::vector<Rational> p(m_ + 1); // p[j] = p_j, p[0] unused
  for (std::size_t k = 1; k <= m_; ++k) {
    Rational acc = eps[k] * Rational(static_cast<long>(k));
    if (k % 2 == 0) acc = -acc;
    for (std::size_t i = 1; i < k; ++i) {
      Rational t = eps[i] * p[k - i];
      if (i % 2 == 0) t = -t;
      acc += t;
    }
    p[k] = acc;
  }

  // (p_n) satisfies the same recurrence as the sequence; extend to the
  // required multiples of the step.
  detail::LinearSequence seq(a_, std::vector<Rational>(p.begin() + 1, p.end()), 1);
  std::vector<Rational> out(m_);
  const std::int64_t span = static_cast<std::int64_t>(m_) * std::llabs(step);
  const bool powering_pays = span > 512;
  for (std::size_t j = 1; j <= m_; ++j) {
    const std::int64_t idx = static_cast<std::int64_t>(j) * step;
    out[j - 1] = powering_pays ? seq.at_fast(idx) : seq.at(idx);
  }
  return out;
}

StepSymmetrics Recurrence::step_symmetrics(std::int64_t step) const {
  const std::vector<Rational> q = power_sums(step); // q[j-1] = power sum at j*step
  // Inverse Newton: k * eps_k = sum_{i=1..k} (-1)^{i-1} eps_{k-i} q_i,
  // for the step-th powers of the roots.
  std::vector<Rational> eps(m_ + 1);
  eps[0] = Rational(1);
  for (std::size_t k = 1; k <= m_; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational t = eps[k - i] * q[i - 1];
      if (i % 2 == 0) t = -t;
      acc += t;
    }
    eps[k] = acc / Rational(static_cast<long>(k));
  }
  StepSymmetrics sym;
  sym.step = step;
  sym.e.resize(m_);
  for (std::size_t j = 1; j <= m_; ++j) {
    Rational v = eps[m_ + 1 - j];
    if ((m_ - j) % 2 == 1) v = -v;
    sym.e[j - 1] = v;
  }
  return sym;
}

ShiftValidity Recurrence::check_shift(std::int64_t h) const {
  if (h == 0) throw Error(Errc::zero_shift, "shift h must be nonzero");
  const StepSymmetrics sym = step_symmetrics(h);
  std::vector<Rational> c(m_ + 1);
  for (std::size_t i = 0; i < m_; ++i) c[i] = -sym.e[i];
  c[m_] = Rational(1);
  ShiftValidity v;
  v.h = h;
  v.step_char_poly = Polynomial(std::move(c));
  v.distinct_powers = v.step_char_poly.is_squarefree();
  v.no_power_is_one = !v.step_char_poly.eval(Rational(1)).is_zero();
  return v;
}

} // namespace lbsum
