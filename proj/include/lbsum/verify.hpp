#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lbsum/closed_form.hpp"

namespace lbsum {

/// Result of the exact left-vs-right sweep. Certified means every n in
/// 1..bound_used matched exactly, which (by the kernel zero-count bound)
/// certifies the identity for all n >= 1.
struct VerificationReport {
  enum class Status { certified, counterexample };

  Status status = Status::certified;
  std::int64_t bound_used = 0;
  std::int64_t n = 0; // first violating n; meaningful for counterexample only
  Rational lhs, rhs;

  bool certified() const { return status == Status::certified; }
};

/// Additive perturbation of a closed-form tuple; at least one component must
/// be nonzero when fed to uniqueness_probe.
struct PerturbationTuple {
  std::vector<Polynomial> gamma; // m+1 components

  bool all_zero() const;
  int max_degree() const;
};

/// Exact direct sum  sum_{k=1}^n P(k) * s_{h*k+r}.  Walks the progression
/// with the step-h window recurrence (O(n*m) scalar operations) instead of
/// recomputing terms from scratch.
Rational naive_sum(const Recurrence& rec, const Polynomial& weight, ShiftParams shift,
                   std::int64_t n);

/// Certification horizon (m+1)(D+1): an exponential polynomial with m+1
/// distinct bases and coefficient degrees <= D that vanishes at this many
/// consecutive integers is identically zero.
std::int64_t kernel_bound(std::size_t m, int max_degree);

/// Compares naive_sum against eval_rhs exactly for n = 1..kernel_bound+extra,
/// with the degree picked from the tuple and the weight.
VerificationReport verify_identity(const ClosedForm& cf, std::int64_t extra = 0);

/// Scans for the least n at which the perturbed tuple (tuple + gamma) breaks
/// the identity. Guaranteed to find one within the kernel bound; a completed
/// scan with no witness signals an implementation bug and throws
/// Errc::no_witness_found.
std::int64_t uniqueness_probe(const ClosedForm& cf, const PerturbationTuple& gamma);

/// Random nonzero perturbation with m+1 components, degrees <= max_degree,
/// coefficients in [-5, 5] with denominators up to 4.
PerturbationTuple random_perturbation(std::mt19937_64& rng, std::size_t m, int max_degree);

} // namespace lbsum
