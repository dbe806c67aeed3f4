#include "lbsum/presets.hpp"

namespace lbsum {

const std::vector<Preset>& preset_registry() {
  static const std::vector<Preset> registry = {
      {"fibonacci", 2, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
      {"lucas", 2, {Rational(1), Rational(1)}, {Rational(1), Rational(3)}},
      {"pell", 2, {Rational(1), Rational(2)}, {Rational(1), Rational(2)}},
      {"tribonacci", 3, {Rational(1), Rational(1), Rational(1)}, {Rational(1), Rational(1), Rational(2)}},
      {"gauss-alt", 2, {Rational(-1), Rational(0)}, {Rational(1), Rational(1)}},
  };
  return registry;
}

const Preset* find_preset(std::string_view name) {
  for (const Preset& p : preset_registry())
    if (p.name == name) return &p;
  return nullptr;
}

Recurrence make_preset(std::string_view name) {
  const Preset* p = find_preset(name);
  if (p == nullptr)
    throw Error(Errc::parse_error, "unknown preset '" + std::string(name) + "'");
  return Recurrence::validate(p->order, p->coefficients, p->initial);
}

} // namespace lbsum
