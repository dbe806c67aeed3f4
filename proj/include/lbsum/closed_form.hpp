#pragma once

#include <cstdint>
#include <vector>

#include "lbsum/recurrence.hpp"

namespace lbsum {

/// Shift pair (h, r): the sum runs over s_{h*k+r}. h must be nonzero and pass
/// check_shift for the recurrence it is paired with.
struct ShiftParams {
  std::int64_t h = 1;
  std::int64_t r = 0;
};

/// Solution of the triangular coefficient system for weight x^d:
/// delta[i] holds the x^i coefficient of the top tuple polynomial.
struct DeltaVector {
  int d = 0;
  std::vector<Rational> delta;
};

/// The derived identity
///   sum_{k=1}^n P(k) s_{h*k+r} = sum_{k=1}^m tuple_k(n) s_{(n+k)h+r} + tuple_{m+1}(n)
/// for all n >= 1. tuple has m+1 entries; the last has degree <= 0.
struct ClosedForm {
  Recurrence recurrence;
  ShiftParams shift;
  Polynomial weight;
  std::vector<Polynomial> tuple;

  std::size_t order() const { return recurrence.order(); }
  int max_tuple_degree() const;
};

/// (d+1)x(d+1) upper-triangular system matrix for weight degree d. All
/// diagonal entries equal -1 + sum_i e_i; throws Errc::invalid_shift when
/// that value is zero (some root power equals 1).
Matrix build_matrix(int d, const StepSymmetrics& sym, std::size_t m);

/// Exact solution of build_matrix(d) * delta = (C(d,0)m^d, ..., C(d,d)m^0)^T.
DeltaVector solve_deltas(int d, const StepSymmetrics& sym, std::size_t m);

/// Closed form for the monomial weight P(x) = x^d.
ClosedForm monomial_tuple(const Recurrence& rec, int d, ShiftParams shift);

/// Closed form for an arbitrary weight: componentwise linear combination of
/// monomial tuples over the monomials of P; the zero weight yields the
/// all-zero tuple.
ClosedForm general_tuple(const Recurrence& rec, const Polynomial& weight, ShiftParams shift);

/// Right side of the identity at n: sum_k tuple_k(n) s_{(n+k)h+r} + tuple_{m+1}(n).
Rational eval_rhs(const ClosedForm& cf, std::int64_t n);

/// Raises Errc::invalid_shift with a message naming the failed hypothesis
/// unless check_shift passes both flags.
void require_valid_shift(const Recurrence& rec, std::int64_t h);

} // namespace lbsum
