#pragma once

#include <cstdint>
#include <vector>

#include "lbsum/matrix.hpp"
#include "lbsum/polynomial.hpp"

namespace lbsum {

/// Coefficients of the recurrence satisfied by every arithmetic-progression
/// subsequence with the given step: s_{m*step+q} = sum_i e_i * s_{(i-1)*step+q}.
/// e holds e_1..e_m (ascending index).
struct StepSymmetrics {
  std::int64_t step = 1;
  std::vector<Rational> e;

  const Rational& at(std::size_t i) const { return e[i - 1]; } // 1-based, mirrors e_i
};

/// Outcome of testing a shift h: whether the h-th powers of the
/// characteristic roots are pairwise distinct and none equals 1.
struct ShiftValidity {
  std::int64_t h = 0;
  bool distinct_powers = false;
  bool no_power_is_one = false;
  Polynomial step_char_poly; // monic, roots are the h-th powers of the roots

  bool ok() const { return distinct_powers && no_power_is_one; }
};

/// Homogeneous linear recurrence sequence of order m >= 2:
///   s_{k+m} = a_m s_{k+m-1} + ... + a_2 s_{k+1} + a_1 s_k,
/// bi-infinite (a_1 != 0 permits backward extension), with initial terms
/// s_1..s_m. Construction goes through validate(), which enforces, in order:
/// a_1 != 0; initial terms not all zero; squarefree characteristic
/// polynomial; minimal recurrence order exactly m (Berlekamp-Massey on
/// s_1..s_{2m}).
class Recurrence {
public:
  static Recurrence validate(std::size_t order, std::vector<Rational> coefficients,
                             std::vector<Rational> initial);

  std::size_t order() const { return m_; }
  /// a_1..a_m; a(i) is 1-based.
  const std::vector<Rational>& coefficients() const { return a_; }
  const Rational& a(std::size_t i) const { return a_[i - 1]; }
  /// s_1..s_m.
  const std::vector<Rational>& initial() const { return s_; }

  /// x^m - a_m x^{m-1} - ... - a_2 x - a_1.
  Polynomial characteristic_polynomial() const;

  /// Exact s_k for any integer k; O(|k|) scalar steps.
  Rational term(std::int64_t k) const;

  /// Exact s_k by binary powering of the companion matrix (inverse companion
  /// for k below the initial window); O(m^3 log|k|) scalar steps.
  Rational term_fast(std::int64_t k) const;

  /// Power sums of the characteristic roots at multiples of the step:
  /// (p_step, p_{2*step}, ..., p_{m*step}) with p_n = sum_i r_i^n. Computed
  /// without root extraction: Newton's identities give p_1..p_m from the
  /// characteristic coefficients, and (p_n) itself satisfies the recurrence.
  std::vector<Rational> power_sums(std::int64_t step) const;

  /// e_1(step)..e_m(step): signed elementary symmetric functions of the
  /// step-th powers of the roots, via power sums + Newton's identities.
  /// For step = 1 this reproduces the recurrence coefficients exactly.
  StepSymmetrics step_symmetrics(std::int64_t step) const;

  /// Tests whether the h-th powers of the characteristic roots are pairwise
  /// distinct and none equals 1 (h != 0).
  ShiftValidity check_shift(std::int64_t h) const;

private:
  Recurrence(std::size_t m, std::vector<Rational> a, std::vector<Rational> s)
      : m_(m), a_(std::move(a)), s_(std::move(s)) {}

  std::size_t m_;
  std::vector<Rational> a_; // a_1..a_m
  std::vector<Rational> s_; // s_1..s_m
};

/// Length of the shortest linear recurrence generating the given terms
/// (Berlekamp-Massey over the rationals).
std::size_t berlekamp_massey_length(const std::vector<Rational>& terms);

namespace detail {

/// One-sided window extension engine shared by term(), power_sums() and the
/// verification walker: a sequence satisfying
/// v_{k+m} = a_m v_{k+m-1} + ... + a_1 v_k with window v_base..v_{base+m-1}.
class LinearSequence {
public:
  LinearSequence(std::vector<Rational> coefficients, std::vector<Rational> window,
                 std::int64_t base);

  /// Value at index k by stepwise extension; O(|k - base| * m).
  Rational at(std::int64_t k) const;

  /// Value at index k by companion-matrix binary powering; O(m^3 log).
  Rational at_fast(std::int64_t k) const;

private:
  std::vector<Rational> a_;
  std::vector<Rational> window_;
  std::int64_t base_;
};

} // namespace detail

} // namespace lbsum
