#pragma once

#include <string>

#include <json.hpp>

#include "lbsum/closed_form.hpp"
#include "lbsum/verify.hpp"

namespace lbsum {

/// A full problem statement: recurrence (inline or preset), shift, weight.
struct ProblemSpec {
  Recurrence recurrence;
  ShiftParams shift;
  Polynomial weight;
};

inline constexpr int kSchemaVersion = 1;

// Rationals serialize as decimal strings "p/q" or "p"; polynomials as
// ascending coefficient arrays of such strings.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::json to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClosedForm& cf);
ClosedForm closed_form_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& report);

ProblemSpec problem_from_json(const nlohmann::json& j);

/// Plain-text rendering of the identity with the tuple spelled out, e.g.
///   P_1 = -1
///   P_2 = n - 1
///   P_3 = 2
std::string render_text(const ClosedForm& cf);

/// LaTeX rendering mirroring the identity layout, with h and r substituted
/// numerically in every subscript.
std::string render_latex(const ClosedForm& cf);

std::string polynomial_latex(const Polynomial& p, std::string_view var);

/// The index coef*var+constant as a display string: (2, 3, "n") gives
/// "2n+3", (1, -1, "k") gives "k-1", (-1, 0, "n") gives "-n".
std::string linear_index(std::int64_t coef, std::int64_t constant, std::string_view var);

} // namespace lbsum
