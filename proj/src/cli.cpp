#include "lbsum/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lbsum/io.hpp"
#include "lbsum/numeric.hpp"
#include "lbsum/presets.hpp"
#include "lbsum/verify.hpp"

namespace lbsum::cli {

namespace {

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error&) {
      throw Error(Errc::parse_error, flag + ": invalid rational '" + item + "'");
    }
  }
  if (out.empty()) throw Error(Errc::parse_error, flag + ": empty list");
  return out;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

/// Flags shared by every subcommand that states a problem.
struct ProblemOptions {
  std::string preset;
  std::string spec_file;
  std::string coefficients;
  std::string initial;
  std::string weight;
  std::int64_t h = 1;
  std::int64_t r = 0;

  CLI::Option* weight_opt = nullptr;
  CLI::Option* h_opt = nullptr;
  CLI::Option* r_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--preset", preset, "named recurrence from the registry");
    cmd->add_option("--spec", spec_file, "JSON problem file (recurrence, shift, weight)");
    cmd->add_option("--coefficients", coefficients, "inline recurrence coefficients a_1..a_m");
    cmd->add_option("--initial", initial, "inline initial terms s_1..s_m");
    weight_opt = cmd->add_option("--weight", weight,
                                 "ascending weight coefficients, e.g. 0,1 for P(x)=x");
    h_opt = cmd->add_option("--h", h, "index stride (nonzero)");
    r_opt = cmd->add_option("--r", r, "index offset");
  }

  ProblemSpec resolve() const {
    std::optional<ProblemSpec> from_file;
    if (!spec_file.empty()) from_file = problem_from_json(load_json_file(spec_file));

    std::optional<Recurrence> rec;
    if (!preset.empty()) {
      rec = make_preset(preset);
    } else if (!coefficients.empty() || !initial.empty()) {
      if (coefficients.empty() || initial.empty())
        throw Error(Errc::parse_error, "--coefficients and --initial must be given together");
      const auto a = parse_rational_list(coefficients, "--coefficients");
      const auto s = parse_rational_list(initial, "--initial");
      rec = Recurrence::validate(a.size(), a, s);
    } else if (from_file) {
      rec = from_file->recurrence;
    } else {
      throw Error(Errc::parse_error, "no recurrence given: use --preset, --spec, or --coefficients/--initial");
    }

    ProblemSpec spec{std::move(*rec), ShiftParams{h, r}, Polynomial{{Rational(1)}}};
    if (from_file) {
      spec.shift = from_file->shift;
      spec.weight = from_file->weight;
    }
    if (weight_opt->count() > 0) spec.weight = Polynomial(parse_rational_list(weight, "--weight"));
    if (h_opt->count() > 0) spec.shift.h = h;
    if (r_opt->count() > 0) spec.shift.r = r;
    return spec;
  }
};

int run_crosschecks(const ClosedForm& cf, std::ostream& out) {
  const Recurrence& rec = cf.recurrence;
  int failures = 0;
  const numeric::Real tol9("1e-9"), tol8("1e-8");

  const bool sym_ok = numeric::crosscheck_symmetrics(rec, cf.shift.h, tol9);
  out << "crosscheck step symmetrics (step " << cf.shift.h << "): " << (sym_ok ? "ok" : "FAILED")
      << "\n";
  failures += sym_ok ? 0 : 1;

  const numeric::SpectralData spectral = numeric::analyze(rec);
  bool terms_ok = true;
  for (std::int64_t k = -60; k <= 60 && terms_ok; ++k) {
    const numeric::Complex approx = numeric::explicit_term(spectral, k);
    const numeric::Real reference = numeric::to_real(rec.term(k));
    const numeric::Real scale = std::max(numeric::Real(1), abs(reference));
    terms_ok = numeric::abs(approx - numeric::Complex(reference)) <= tol9 * scale;
  }
  out << "crosscheck explicit terms (|k| <= 60): " << (terms_ok ? "ok" : "FAILED") << "\n";
  failures += terms_ok ? 0 : 1;

  const int d = std::max(cf.weight.degree(), 0);
  const bool det_ok = numeric::crosscheck_determinant(rec, d, cf.shift.h, tol8);
  out << "crosscheck determinant (d = " << d << "): " << (det_ok ? "ok" : "FAILED") << "\n";
  failures += det_ok ? 0 : 1;

  return failures == 0 ? kExitOk : kExitCounterexample;
}

std::string describe_recurrence(const Recurrence& rec) {
  std::ostringstream os;
  os << "order " << rec.order() << ", a = (";
  for (std::size_t i = 0; i < rec.order(); ++i)
    os << (i ? ", " : "") << rec.coefficients()[i].str();
  os << "), s = (";
  for (std::size_t i = 0; i < rec.order(); ++i) os << (i ? ", " : "") << rec.initial()[i].str();
  os << ")";
  return os.str();
}

int cmd_derive(const ProblemOptions& options, const std::string& format, std::ostream& out) {
  const ProblemSpec spec = options.resolve();
  const ClosedForm cf = general_tuple(spec.recurrence, spec.weight, spec.shift);
  if (format == "json") {
    out << to_json(cf).dump(2) << "\n";
  } else if (format == "latex") {
    out << render_latex(cf) << "\n";
  } else {
    out << render_text(cf);
  }
  return kExitOk;
}

int cmd_verify(const ProblemOptions& options, const std::string& from_file, std::int64_t extra,
               bool crosscheck, const std::string& format, std::ostream& out) {
  const ClosedForm cf = from_file.empty()
                            ? [&] {
                                const ProblemSpec spec = options.resolve();
                                return general_tuple(spec.recurrence, spec.weight, spec.shift);
                              }()
                            : closed_form_from_json(load_json_file(from_file));
  const VerificationReport report = verify_identity(cf, extra);
  if (format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (report.certified()) {
    out << "Certified (n = 1.." << report.bound_used << ")\n";
  } else {
    out << "Counterexample at n = " << report.n << ": lhs = " << report.lhs.str()
        << ", rhs = " << report.rhs.str() << "\n";
  }
  if (!report.certified()) return kExitCounterexample;
  if (crosscheck) return run_crosschecks(cf, out);
  return kExitOk;
}

int cmd_eval(const ProblemOptions& options, std::int64_t n, const std::string& method,
             std::ostream& out) {
  const ProblemSpec spec = options.resolve();
  using clock = std::chrono::steady_clock;
  const auto micros = [](clock::duration d) {
    return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
  };

  out << "n = " << n << "\n";
  std::optional<Rational> closed_value, naive_value;
  long long closed_us = 0, naive_us = 0;
  if (method == "closed" || method == "both") {
    const auto t0 = clock::now();
    const ClosedForm cf = general_tuple(spec.recurrence, spec.weight, spec.shift);
    closed_value = eval_rhs(cf, n);
    closed_us = micros(clock::now() - t0);
    out << "closed = " << closed_value->str() << "\n";
    out << "closed time = " << closed_us << " us\n";
  }
  if (method == "naive" || method == "both") {
    const auto t0 = clock::now();
    naive_value = naive_sum(spec.recurrence, spec.weight, spec.shift, n);
    naive_us = micros(clock::now() - t0);
    out << "naive = " << naive_value->str() << "\n";
    out << "naive time = " << naive_us << " us\n";
  }
  if (method == "both") {
    const bool equal = *closed_value == *naive_value;
    out << "equal: " << (equal ? "yes" : "NO") << "\n";
    if (closed_us > 0)
      out << "speedup: " << static_cast<double>(naive_us) / static_cast<double>(closed_us)
          << "x\n";
    if (!equal) return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_probe(const ProblemOptions& options, std::int64_t trials, std::uint64_t seed,
              int max_degree, std::ostream& out) {
  const ProblemSpec spec = options.resolve();
  const ClosedForm cf = general_tuple(spec.recurrence, spec.weight, spec.shift);
  const std::int64_t bound =
      kernel_bound(cf.order(), std::max({max_degree, cf.max_tuple_degree(), 0}));

  std::mt19937_64 rng(seed);
  std::int64_t min_witness = 0, max_witness = 0, total = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const PerturbationTuple gamma = random_perturbation(rng, cf.order(), max_degree);
    const std::int64_t witness = uniqueness_probe(cf, gamma);
    min_witness = (t == 0) ? witness : std::min(min_witness, witness);
    max_witness = std::max(max_witness, witness);
    total += witness;
  }
  out << "probe: " << trials << " trials, degrees <= " << max_degree << ", seed " << seed << "\n";
  out << "witnesses: min = " << min_witness << ", max = " << max_witness
      << ", mean = " << (trials > 0 ? static_cast<double>(total) / static_cast<double>(trials) : 0.0)
      << ", bound = " << bound << "\n";
  out << "all " << trials << " perturbations violated the identity\n";
  return kExitOk;
}

int cmd_presets(std::ostream& out) {
  for (const Preset& p : preset_registry()) {
    out << p.name << ": ";
    try {
      const Recurrence rec = Recurrence::validate(p.order, p.coefficients, p.initial);
      out << describe_recurrence(rec) << " [valid]\n";
    } catch (const Error& e) {
      out << "[invalid: " << e.what() << "]\n";
    }
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"closed forms for polynomial-weighted sums over linear recurrence sequences"};
  app.require_subcommand(1);

  ProblemOptions derive_opts, verify_opts, eval_opts, probe_opts;

  CLI::App* derive = app.add_subcommand("derive", "construct the closed-form tuple");
  derive_opts.attach(derive);
  std::string derive_format = "text";
  derive->add_option("--format", derive_format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "derive and certify the identity");
  verify_opts.attach(verify);
  std::string verify_from, verify_format = "text";
  std::int64_t verify_extra = 0;
  bool crosscheck = false;
  verify->add_option("--from", verify_from, "verify a previously derived closed-form JSON file");
  verify->add_option("--extra", verify_extra, "extra n beyond the kernel bound")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--crosscheck", crosscheck, "run the approximate spectral crosschecks");
  verify->add_option("--format", verify_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* eval = app.add_subcommand("eval", "evaluate the sum at a given n");
  eval_opts.attach(eval);
  std::int64_t eval_n = 1;
  std::string method = "both";
  eval->add_option("--n", eval_n, "upper summation limit")->required()->check(CLI::PositiveNumber);
  eval->add_option("--method", method, "closed | naive | both")
      ->check(CLI::IsMember({"closed", "naive", "both"}));

  CLI::App* probe = app.add_subcommand("probe", "random perturbations of the tuple");
  probe_opts.attach(probe);
  std::int64_t trials = 100;
  std::uint64_t seed = 12345;
  int max_degree = 3;
  probe->add_option("--trials", trials, "number of random perturbations")
      ->check(CLI::PositiveNumber);
  probe->add_option("--seed", seed, "random seed");
  probe->add_option("--max-degree", max_degree, "perturbation degree cap")
      ->check(CLI::NonNegativeNumber);

  CLI::App* presets = app.add_subcommand("presets", "list the preset registry");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSpecError;
  }

  try {
    if (derive->parsed()) return cmd_derive(derive_opts, derive_format, out);
    if (verify->parsed())
      return cmd_verify(verify_opts, verify_from, verify_extra, crosscheck, verify_format, out);
    if (eval->parsed()) return cmd_eval(eval_opts, eval_n, method, out);
    if (probe->parsed()) return cmd_probe(probe_opts, trials, seed, max_degree, out);
    if (presets->parsed()) return cmd_presets(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::no_witness_found ? kExitInternal : kExitSpecError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitSpecError;
}

} // namespace lbsum::cli
