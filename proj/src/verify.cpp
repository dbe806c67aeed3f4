#include "lbsum/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lbsum {

namespace {

/// Incremental walker for the weighted progression sum: after k calls to
/// step(), sum() is  sum_{j=1}^k P(j) s_{h*j+r}  and term() is s_{h*k+r}.
class ProgressionWalker {
public:
  ProgressionWalker(const Recurrence& rec, const Polynomial& weight, ShiftParams shift)
      : weight_(weight), e_(rec.step_symmetrics(shift.h).e), k_(0) {
    const std::size_t m = rec.order();
    window_.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t index = (1 - static_cast<std::int64_t>(m) + static_cast<std::int64_t>(j));
      window_.push_back(rec.term(index * shift.h + shift.r));
    }
  }

  void step() {
    Rational next;
    for (std::size_t i = 0; i < e_.size(); ++i) next += e_[i] * window_[i];
    std::rotate(window_.begin(), window_.begin() + 1, window_.end());
    window_.back() = std::move(next);
    ++k_;
    sum_ += weight_.eval(Rational(k_)) * window_.back();
  }

  const Rational& sum() const { return sum_; }
  const Rational& term() const { return window_.back(); }

private:
  Polynomial weight_;
  std::vector<Rational> e_;
  std::vector<Rational> window_; // s_{h*(k-m+1)+r} .. s_{h*k+r}
  std::int64_t k_;
  Rational sum_;
};

int weight_and_tuple_degree(const ClosedForm& cf) {
  return std::max({cf.weight.degree(), cf.max_tuple_degree(), 0});
}

} // namespace

bool PerturbationTuple::all_zero() const {
  return std::all_of(gamma.begin(), gamma.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

int PerturbationTuple::max_degree() const {
  int d = -1;
  for (const auto& p : gamma) d = std::max(d, p.degree());
  return d;
}

Rational naive_sum(const Recurrence& rec, const Polynomial& weight, ShiftParams shift,
                   std::int64_t n) {
  if (n < 1) throw std::invalid_argument("naive_sum requires n >= 1");
  ProgressionWalker walker(rec, weight, shift);
  for (std::int64_t k = 1; k <= n; ++k) walker.step();
  return walker.sum();
}

std::int64_t kernel_bound(std::size_t m, int max_degree) {
  if (m < 2) throw Error(Errc::order_too_small, "kernel bound needs order >= 2");
  if (max_degree < 0) throw std::invalid_argument("kernel bound needs degree >= 0");
  return static_cast<std::int64_t>(m + 1) * (max_degree + 1);
}

VerificationReport verify_identity(const ClosedForm& cf, std::int64_t extra) {
  VerificationReport report;
  report.bound_used = kernel_bound(cf.order(), weight_and_tuple_degree(cf)) + extra;
  ProgressionWalker walker(cf.recurrence, cf.weight, cf.shift);
  for (std::int64_t n = 1; n <= report.bound_used; ++n) {
    walker.step();
    Rational rhs = eval_rhs(cf, n);
    if (walker.sum() != rhs) {
      report.status = VerificationReport::Status::counterexample;
      report.n = n;
      report.lhs = walker.sum();
      report.rhs = std::move(rhs);
      return report;
    }
  }
  report.status = VerificationReport::Status::certified;
  return report;
}

std::int64_t uniqueness_probe(const ClosedForm& cf, const PerturbationTuple& gamma) {
  if (gamma.gamma.size() != cf.order() + 1)
    throw std::invalid_argument("perturbation tuple size must be order + 1");
  if (gamma.all_zero())
    throw std::invalid_argument("perturbation tuple must not be all zero");

  ClosedForm perturbed = cf;
  for (std::size_t k = 0; k < perturbed.tuple.size(); ++k)
    perturbed.tuple[k] += gamma.gamma[k];

  const std::int64_t bound =
      kernel_bound(cf.order(), std::max({gamma.max_degree(), cf.max_tuple_degree(), 0}));
  ProgressionWalker walker(cf.recurrence, cf.weight, cf.shift);
  for (std::int64_t n = 1; n <= bound; ++n) {
    walker.step();
    if (walker.sum() != eval_rhs(perturbed, n)) return n;
  }
  throw Error(Errc::no_witness_found,
              "perturbed tuple satisfied the identity through the full kernel bound; "
              "this contradicts uniqueness and indicates a defect");
}

PerturbationTuple random_perturbation(std::mt19937_64& rng, std::size_t m, int max_degree) {
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::uniform_int_distribution<int> zero_dist(0, 2);
  PerturbationTuple out;
  do {
    out.gamma.assign(m + 1, Polynomial{});
    for (auto& component : out.gamma) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(max_degree) + 1);
      for (auto& c : coeffs) {
        if (zero_dist(rng) == 0) continue; // leave a third of the slots zero
        const int den = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(-5 * den, 5 * den);
        c = Rational(num_dist(rng), den);
      }
      component = Polynomial(std::move(coeffs));
    }
  } while (out.all_zero());
  return out;
}

} // namespace lbsum
