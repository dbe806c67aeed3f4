#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lbsum::cli {

/// Exit codes: 0 success, 2 spec/validation error, 3 verification failure
/// (counterexample, eval mismatch, failed crosscheck), 4 internal invariant
/// breach (e.g. a uniqueness probe that finds no witness).
inline constexpr int kExitOk = 0;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitCounterexample = 3;
inline constexpr int kExitInternal = 4;

/// Runs one subcommand (derive | verify | eval | probe | presets). args does
/// not include the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lbsum::cli
