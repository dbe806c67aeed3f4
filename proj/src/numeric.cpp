#include "lbsum/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "lbsum/closed_form.hpp"

namespace lbsum::numeric {

namespace {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
}

Real two_pow(long e) {
  return boost::multiprecision::ldexp(Real(1), e);
}

std::vector<Real> real_coeffs(const Polynomial& p) {
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(p.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i) out.push_back(to_real(p.coeff(i)));
  return out;
}

Complex eval(const std::vector<Real>& coeffs, const Complex& z) {
  Complex acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + Complex(*it);
  return acc;
}

} // namespace

PrecisionScope::PrecisionScope(unsigned bits)
    : previous_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_digits10_); }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Complex pow(Complex z, std::int64_t e) {
  Complex acc{Real(1), Real(0)};
  if (e == 0) return acc;
  if (e < 0) {
    z = acc / z;
    e = -e;
  }
  while (true) {
    if (e & 1) acc = acc * z;
    e >>= 1;
    if (e == 0) break;
    z = z * z;
  }
  return acc;
}

Real to_real(const Rational& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

Complex to_complex(const Rational& q) { return {to_real(q), Real(0)}; }

Real epsilon() { return two_pow(-128); }

std::vector<Complex> find_roots(const Polynomial& cp, unsigned precision_bits) {
  PrecisionScope scope(precision_bits);
  const int degree = cp.degree();
  if (degree < 2) throw Error(Errc::shape_mismatch, "root finding needs degree >= 2");

  std::vector<Real> c = real_coeffs(cp.monic());
  std::vector<Real> dc(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * static_cast<long>(i);

  // Perturbed circle of radius 1 + max |c_i| (a root bound for monic input).
  Real radius(1);
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    radius = (std::max)(radius, boost::multiprecision::abs(c[i]));
  radius += 1;
  std::mt19937_64 rng(0x6c62756d5f726ecbULL); // fixed seed: runs are reproducible
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);

  const Real pi = 4 * atan(Real(1));
  std::vector<Complex> z(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    Real angle = (2 * pi * i) / degree + Real(0.35) / degree + Real(jitter(rng));
    Real rad = radius * (Real(9) / 10 + Real(jitter(rng)));
    z[static_cast<std::size_t>(i)] =
        Complex(rad * boost::multiprecision::cos(angle), rad * boost::multiprecision::sin(angle));
  }

  const Real target = two_pow(-static_cast<long>(precision_bits) / 2);
  for (int sweep = 0; sweep < 200; ++sweep) {
    Real worst(0);
    std::vector<Complex> values(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      values[i] = eval(c, z[i]);
      worst = (std::max)(worst, abs(values[i]));
    }
    if (worst < target) {
      std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        const Real ma = abs(a), mb = abs(b);
        if (ma != mb) return ma < mb;
        return boost::multiprecision::atan2(a.im, a.re) < boost::multiprecision::atan2(b.im, b.re);
      });
      return z;
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Complex dp = eval(dc, z[i]);
      if (abs(dp) == 0) { // landed on a critical point: nudge and continue
        z[i].re += Real(1) / 1024;
        continue;
      }
      const Complex newton = values[i] / dp;
      Complex repulsion;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) repulsion += Complex{Real(1), Real(0)} / (z[i] - z[j]);
      const Complex denom = Complex{Real(1), Real(0)} - newton * repulsion;
      z[i] -= abs(denom) == 0 ? newton : newton / denom;
    }
  }
  throw Error(Errc::no_convergence,
              "root iteration did not reach the residual target; precision too low");
}

std::vector<Complex> solve_weights(const std::vector<Rational>& coefficients,
                                   const std::vector<Rational>& initial,
                                   const std::vector<Complex>& roots, unsigned precision_bits) {
  PrecisionScope scope(precision_bits);
  const std::size_t m = roots.size();
  const Real eps = epsilon();

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (abs(roots[i] - roots[j]) <= eps)
        throw Error(Errc::ill_conditioned, "root separation below tolerance");

  // Rows (r_1^k ... r_m^k), k = 1..m; eliminate with partial pivoting.
  std::vector<std::vector<Complex>> aug(m, std::vector<Complex>(m + 1));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j)
      aug[k][j] = pow(roots[j], static_cast<std::int64_t>(k) + 1);
    aug[k][m] = to_complex(initial[k]);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row)
      if (abs(aug[row][col]) > abs(aug[pivot][col])) pivot = row;
    std::swap(aug[col], aug[pivot]);
    if (abs(aug[col][col]) <= eps)
      throw Error(Errc::ill_conditioned, "pivot below tolerance in weight solve");
    for (std::size_t row = col + 1; row < m; ++row) {
      const Complex factor = aug[row][col] / aug[col][col];
      for (std::size_t j = col; j <= m; ++j) aug[row][j] -= factor * aug[col][j];
    }
  }
  std::vector<Complex> w(m);
  for (std::size_t i = m; i-- > 0;) {
    Complex acc = aug[i][m];
    for (std::size_t j = i + 1; j < m; ++j) acc -= aug[i][j] * w[j];
    w[i] = acc / aug[i][i];
  }

  // Residual on the doubled window: the formula must reproduce s_1..s_{2m}.
  detail::LinearSequence seq(coefficients, initial, 1);
  for (std::size_t k = 1; k <= 2 * m; ++k) {
    Complex predicted;
    for (std::size_t i = 0; i < m; ++i)
      predicted += w[i] * pow(roots[i], static_cast<std::int64_t>(k));
    if (abs(predicted - to_complex(seq.at(static_cast<std::int64_t>(k)))) > eps)
      throw Error(Errc::ill_conditioned, "explicit-formula residual exceeds tolerance");
  }
  for (const Complex& wi : w)
    if (abs(wi) <= eps)
      throw Error(Errc::ill_conditioned,
                  "explicit-formula weight vanishes; sequence is degenerate for this order");
  return w;
}

std::vector<Complex> solve_weights(const Recurrence& rec, const std::vector<Complex>& roots,
                                   unsigned precision_bits) {
  return solve_weights(rec.coefficients(), rec.initial(), roots, precision_bits);
}

SpectralData analyze(const Recurrence& rec, unsigned precision_bits) {
  unsigned bits = precision_bits;
  for (int attempt = 0;; ++attempt) {
    try {
      SpectralData data;
      data.precision_bits = bits;
      data.roots = find_roots(rec.characteristic_polynomial(), bits);
      data.weights = solve_weights(rec, data.roots, bits);
      return data;
    } catch (const Error& e) {
      if (e.code() != Errc::no_convergence || attempt >= 3) throw;
      bits *= 2;
    }
  }
}

Complex explicit_term(const SpectralData& spectral, std::int64_t k) {
  PrecisionScope scope(spectral.precision_bits);
  Complex acc;
  for (std::size_t i = 0; i < spectral.roots.size(); ++i)
    acc += spectral.weights[i] * pow(spectral.roots[i], k);
  return acc;
}

bool crosscheck_symmetrics(const Recurrence& rec, std::int64_t step, const Real& tol) {
  const SpectralData spectral = analyze(rec);
  PrecisionScope scope(spectral.precision_bits);
  const std::size_t m = rec.order();

  // Coefficients of prod_i (x - r_i^step), low to high; the signed elementary
  // symmetric functions fall out of the expansion.
  std::vector<Complex> poly{Complex{Real(1), Real(0)}};
  for (const Complex& root : spectral.roots) {
    const Complex b = pow(root, step);
    poly.insert(poly.begin(), Complex{});
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) poly[i] -= b * poly[i + 1];
  }
  // poly[m - k] = (-1)^k eps_k; recover e_j = (-1)^(m-j) eps_{m+1-j}.
  const StepSymmetrics exact = rec.step_symmetrics(step);
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t k = m + 1 - j;
    Complex eps = poly[m - k];
    if (k % 2 == 1) eps = -eps;
    Complex approx = eps;
    if ((m - j) % 2 == 1) approx = -approx;
    const Real reference = to_real(exact.at(j));
    const Real scale = (std::max)(Real(1), boost::multiprecision::abs(reference));
    if (abs(approx - to_complex(exact.at(j))) > tol * scale) return false;
  }
  return true;
}

bool crosscheck_determinant(const Recurrence& rec, int d, std::int64_t h, const Real& tol) {
  const Matrix m = build_matrix(d, rec.step_symmetrics(h), rec.order());
  Rational diag_product(1);
  for (std::size_t i = 1; i <= m.rows(); ++i) diag_product *= m.at(i, i);

  const SpectralData spectral = analyze(rec);
  PrecisionScope scope(spectral.precision_bits);
  Complex prod{Real(1), Real(0)};
  for (const Complex& root : spectral.roots)
    prod = prod * (Complex{Real(1), Real(0)} - pow(root, h));
  const Complex determinant = pow(-prod, d + 1);

  const Real reference = to_real(diag_product);
  return abs(determinant - to_complex(diag_product)) <=
         tol * boost::multiprecision::abs(reference);
}

} // namespace lbsum::numeric
