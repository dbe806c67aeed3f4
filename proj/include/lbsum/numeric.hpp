#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "lbsum/recurrence.hpp"

namespace lbsum::numeric {

/// Multiple-precision real; precision is set per scope via PrecisionScope.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

constexpr unsigned kDefaultPrecisionBits = 256;

/// Sets the thread default precision (in bits) for the enclosing scope and
/// restores the previous value on exit.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  unsigned previous_digits10_;
};

/// Complex number over Real. Comparisons against zero use the module
/// tolerance eps = 2^-128 at the call sites, never exact equality.
struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

  friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

Real abs(const Complex& z);
Complex pow(Complex z, std::int64_t e);

Real to_real(const Rational& q);
Complex to_complex(const Rational& q);

/// 2^-128, the zero/separation tolerance.
Real epsilon();

/// Spectral view of a recurrence: approximate characteristic roots ordered by
/// nondecreasing magnitude (ties by argument angle) and the weights of the
/// explicit term formula s_k = sum_i weights[i] * roots[i]^k.
struct SpectralData {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::vector<Complex> roots;
  std::vector<Complex> weights;
};

/// Simultaneous-iteration (Aberth-Ehrlich) root finding from perturbed-circle
/// initial guesses; deterministic. Requires an exactly squarefree input of
/// degree >= 2. Converged when every residual |cp(z_i)| < 2^(-precision/2);
/// throws Errc::no_convergence after 200 sweeps.
std::vector<Complex> find_roots(const Polynomial& cp, unsigned precision_bits);

/// Explicit-formula weights from the power-basis linear system with rows
/// (r_1^k, ..., r_m^k), k = 1..m, right side s_1..s_m; partial pivoting.
/// Checks the residual on the doubled window k = 1..2m and that every weight
/// magnitude clears the tolerance; throws Errc::ill_conditioned otherwise.
/// The raw overload exists so the diagnostics can be pointed at inputs the
/// exact validator rejects.
std::vector<Complex> solve_weights(const std::vector<Rational>& coefficients,
                                   const std::vector<Rational>& initial,
                                   const std::vector<Complex>& roots, unsigned precision_bits);
std::vector<Complex> solve_weights(const Recurrence& rec, const std::vector<Complex>& roots,
                                   unsigned precision_bits);

/// find_roots + solve_weights with sorting and the retry policy: on
/// NoConvergence the working precision is doubled, at most 3 retries.
SpectralData analyze(const Recurrence& rec, unsigned precision_bits = kDefaultPrecisionBits);

/// sum_i weights[i] * roots[i]^k at the data's working precision.
Complex explicit_term(const SpectralData& spectral, std::int64_t k);

/// Elementary symmetric functions of the step-th root powers, numerically,
/// against the exact step_symmetrics; true when every component agrees
/// within tol (scaled by max(1, |exact|)).
bool crosscheck_symmetrics(const Recurrence& rec, std::int64_t step, const Real& tol);

/// Product of the diagonal of the exact triangular system matrix against
/// (-prod_i (1 - r_i^h))^(d+1), within relative tol.
bool crosscheck_determinant(const Recurrence& rec, int d, std::int64_t h, const Real& tol);

} // namespace lbsum::numeric
