#include "lbsum/io.hpp"

#include <sstream>

#include "lbsum/presets.hpp"

namespace lbsum {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(Errc::parse_error, "field '" + field + "' must hold rationals as strings");
}

std::vector<Rational> rational_array(const json& j, const std::string& field) {
  if (!j.is_array())
    throw Error(Errc::parse_error, "field '" + field + "' must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rational_from_json(item, field));
  return out;
}

const json& require(const json& j, const std::string& field) {
  const auto it = j.find(field);
  if (it == j.end())
    throw Error(Errc::parse_error, "missing field '" + field + "'");
  return *it;
}

std::int64_t integer_field(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number_integer())
    throw Error(Errc::parse_error, "field '" + field + "' must be an integer");
  return v.get<std::int64_t>();
}

} // namespace

json to_json(const Polynomial& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  return arr;
}

Polynomial polynomial_from_json(const json& j, const std::string& field) {
  return Polynomial(rational_array(j, field));
}

json to_json(const Recurrence& rec) {
  json coeffs = json::array(), init = json::array();
  for (const auto& a : rec.coefficients()) coeffs.push_back(a.str());
  for (const auto& s : rec.initial()) init.push_back(s.str());
  return json{{"order", rec.order()}, {"coefficients", coeffs}, {"initial", init}};
}

Recurrence recurrence_from_json(const json& j) {
  if (!j.is_object())
    throw Error(Errc::parse_error, "field 'recurrence' must be an object");
  if (j.contains("preset")) {
    const json& name = j.at("preset");
    if (!name.is_string())
      throw Error(Errc::parse_error, "field 'preset' must be a string");
    return make_preset(name.get<std::string>());
  }
  const std::int64_t order = integer_field(j, "order");
  if (order < 0)
    throw Error(Errc::parse_error, "field 'order' must be nonnegative");
  return Recurrence::validate(static_cast<std::size_t>(order),
                              rational_array(require(j, "coefficients"), "coefficients"),
                              rational_array(require(j, "initial"), "initial"));
}

json to_json(const ClosedForm& cf) {
  json tuple = json::array();
  for (const auto& p : cf.tuple) tuple.push_back(to_json(p));
  return json{{"schema", kSchemaVersion},
              {"recurrence", to_json(cf.recurrence)},
              {"shift", {{"h", cf.shift.h}, {"r", cf.shift.r}}},
              {"weight", to_json(cf.weight)},
              {"tuple", tuple}};
}

ClosedForm closed_form_from_json(const json& j) {
  if (j.contains("schema") && j.at("schema") != kSchemaVersion)
    throw Error(Errc::parse_error, "unsupported schema version");
  Recurrence rec = recurrence_from_json(require(j, "recurrence"));
  const json& shift = require(j, "shift");
  ShiftParams params{integer_field(shift, "h"), integer_field(shift, "r")};
  Polynomial weight = polynomial_from_json(require(j, "weight"), "weight");
  const json& tuple_json = require(j, "tuple");
  if (!tuple_json.is_array() || tuple_json.size() != rec.order() + 1)
    throw Error(Errc::parse_error, "field 'tuple' must hold order+1 polynomials");
  std::vector<Polynomial> tuple;
  tuple.reserve(tuple_json.size());
  for (const auto& item : tuple_json) tuple.push_back(polynomial_from_json(item, "tuple"));
  return ClosedForm{std::move(rec), params, std::move(weight), std::move(tuple)};
}

json to_json(const VerificationReport& report) {
  json out{{"status", report.certified() ? "certified" : "counterexample"},
           {"bound_used", report.bound_used},
           {"n", nullptr},
           {"lhs", nullptr},
           {"rhs", nullptr}};
  if (!report.certified()) {
    out["n"] = report.n;
    out["lhs"] = report.lhs.str();
    out["rhs"] = report.rhs.str();
  }
  return out;
}

ProblemSpec problem_from_json(const json& j) {
  if (!j.is_object())
    throw Error(Errc::parse_error, "problem spec must be a JSON object");
  Recurrence rec = recurrence_from_json(require(j, "recurrence"));
  const json& shift = require(j, "shift");
  ShiftParams params{integer_field(shift, "h"), integer_field(shift, "r")};
  Polynomial weight = polynomial_from_json(require(j, "weight"), "weight");
  return ProblemSpec{std::move(rec), params, std::move(weight)};
}

std::string linear_index(std::int64_t coef, std::int64_t constant, std::string_view var) {
  std::ostringstream os;
  if (coef == 1) {
    os << var;
  } else if (coef == -1) {
    os << "-" << var;
  } else if (coef != 0) {
    os << coef << var;
  }
  if (coef == 0) {
    os << constant;
  } else if (constant > 0) {
    os << "+" << constant;
  } else if (constant < 0) {
    os << constant;
  }
  return os.str();
}

std::string render_text(const ClosedForm& cf) {
  const std::size_t m = cf.order();
  std::ostringstream os;
  os << "sum_{k=1..n} (" << cf.weight.str("k") << ") * s[" << linear_index(cf.shift.h, cf.shift.r, "k")
     << "] = ";
  bool first = true;
  for (std::size_t k = 1; k <= m; ++k) {
    if (cf.tuple[k - 1].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << cf.tuple[k - 1].str("n") << ") * s["
       << linear_index(cf.shift.h, static_cast<std::int64_t>(k) * cf.shift.h + cf.shift.r, "n")
       << "]";
    first = false;
  }
  if (!cf.tuple[m].is_zero() || first) {
    if (!first) os << " + ";
    os << "(" << cf.tuple[m].str("n") << ")";
  }
  os << "\n";
  for (std::size_t k = 1; k <= m + 1; ++k)
    os << "P_" << k << " = " << cf.tuple[k - 1].str("n") << "\n";
  return os.str();
}

std::string polynomial_latex(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(i);
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    std::string coeff_text = mag.is_integer()
                                 ? mag.str()
                                 : "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}";
    if (i == 0) {
      os << coeff_text;
    } else {
      if (!unit) os << coeff_text << " ";
      os << var;
      if (i > 1) os << "^{" << i << "}";
    }
  }
  return os.str();
}

std::string render_latex(const ClosedForm& cf) {
  const std::size_t m = cf.order();
  std::ostringstream os;
  os << "\\sum_{k=1}^{n} \\left(" << polynomial_latex(cf.weight, "k") << "\\right) s_{"
     << linear_index(cf.shift.h, cf.shift.r, "k") << "} = ";
  bool first = true;
  for (std::size_t k = 1; k <= m; ++k) {
    if (cf.tuple[k - 1].is_zero()) continue;
    if (!first) os << " + ";
    os << "\\left(" << polynomial_latex(cf.tuple[k - 1], "n") << "\\right) s_{"
       << linear_index(cf.shift.h, static_cast<std::int64_t>(k) * cf.shift.h + cf.shift.r, "n")
       << "}";
    first = false;
  }
  if (!cf.tuple[m].is_zero() || first) {
    if (!first) os << " + ";
    os << "\\left(" << polynomial_latex(cf.tuple[m], "n") << "\\right)";
  }
  return os.str();
}

} // namespace lbsum
