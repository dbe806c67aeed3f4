#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lbsum/recurrence.hpp"

namespace lbsum {

struct Preset {
  std::string name;
  std::size_t order;
  std::vector<Rational> coefficients; // a_1..a_m
  std::vector<Rational> initial;      // s_1..s_m
};

/// Built-in sequences: fibonacci, lucas, pell, tribonacci, gauss-alt.
const std::vector<Preset>& preset_registry();

const Preset* find_preset(std::string_view name);

/// Validated recurrence for a registry entry; throws Errc::parse_error for
/// unknown names.
Recurrence make_preset(std::string_view name);

} // namespace lbsum
