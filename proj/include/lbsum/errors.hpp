#pragma once

#include <stdexcept>
#include <string>

namespace lbsum {

/// Machine-checkable failure categories. Every Error carries one of these
/// plus a human-readable message naming the violated constraint.
enum class Errc {
  division_by_zero,
  zero_polynomial,
  singular_diagonal,
  shape_mismatch,
  order_too_small,
  zero_a1,
  all_initial_zero,
  repeated_roots,
  not_minimal,
  zero_shift,
  invalid_shift,
  no_convergence,
  ill_conditioned,
  no_witness_found,
  parse_error,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace lbsum
