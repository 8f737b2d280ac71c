#include "io/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace cgr {

namespace {

// Integers that parse losslessly as JSON numbers stay numeric; anything
// beyond 2^53 is emitted as a decimal string.
Json int_json(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (v <= kSafe && v >= -kSafe) return Json(v.convert_to<long long>());
  return Json(v.str());
}

}  // namespace

Json scalar_json(const Radical& x) {
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms()) {
    terms.push_back(Json{{"num", int_json(numerator(c))},
                         {"den", int_json(denominator(c))},
                         {"rad", d}});
  }
  return Json{{"terms", std::move(terms)}, {"approx", x.approx()}};
}

Json scalar_json(const Approx& x) { return Json(x.value()); }

Json scalar_json(const Cx<Radical>& x) {
  if (x.is_real()) return scalar_json(x.re);
  return Json{{"re", scalar_json(x.re)}, {"im", scalar_json(x.im)}};
}

Json scalar_json(const Cx<Approx>& x) {
  if (x.is_real()) return scalar_json(x.re);
  return Json{{"re", scalar_json(x.re)}, {"im", scalar_json(x.im)}};
}

Radical radical_from_json(const Json& j) {
  if (j.is_number_integer()) return Radical(Rational(j.get<long long>()));
  if (j.is_number_float()) {
    double v = j.get<double>();
    long long r = std::llround(v);
    if (static_cast<double>(r) == v) return Radical(Rational(r));
    throw std::domain_error("non-integer numeric literal is not exact; use the terms form");
  }
  if (j.is_object()) {
    if (j.contains("num")) {
      Int num(j.at("num").is_string() ? Int(j.at("num").get<std::string>())
                                      : Int(j.at("num").get<long long>()));
      Int den(j.contains("den")
                  ? (j.at("den").is_string() ? Int(j.at("den").get<std::string>())
                                             : Int(j.at("den").get<long long>()))
                  : Int(1));
      std::int64_t rad = j.contains("rad") ? j.at("rad").get<std::int64_t>() : 1;
      return Radical::radical_term(Rational(num, den), rad);
    }
    if (j.contains("terms")) {
      Radical acc;
      for (const Json& t : j.at("terms")) acc += radical_from_json(t);
      return acc;
    }
  }
  throw std::domain_error("unrecognized exact scalar encoding");
}

Approx approx_from_json(const Json& j) {
  if (j.is_number()) return Approx(j.get<double>());
  if (j.is_object()) return Approx(radical_from_json(j).approx());
  throw std::domain_error("unrecognized scalar encoding");
}

std::string scalar_text(const Radical& x) { return x.to_string(); }
std::string scalar_text(const Approx& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x.value());
  return buf;
}
std::string scalar_text(const Cx<Radical>& x) {
  if (x.is_real()) return scalar_text(x.re);
  return "(" + scalar_text(x.re) + ") + (" + scalar_text(x.im) + ")i";
}
std::string scalar_text(const Cx<Approx>& x) {
  if (x.is_real()) return scalar_text(x.re);
  return "(" + scalar_text(x.re) + ") + (" + scalar_text(x.im) + ")i";
}

std::string scalar_latex_any(const Radical& x) { return to_latex(x); }
std::string scalar_latex_any(const Approx& x) { return to_latex(x); }
std::string scalar_latex_any(const Cx<Radical>& x) {
  if (x.is_real()) return to_latex(x.re);
  return "\\left(" + to_latex(x.re) + "\\right) + \\left(" + to_latex(x.im) + "\\right) i";
}
std::string scalar_latex_any(const Cx<Approx>& x) {
  if (x.is_real()) return to_latex(x.re);
  return "\\left(" + to_latex(x.re) + "\\right) + \\left(" + to_latex(x.im) + "\\right) i";
}

Json oracle_report_json(const OracleReport& rep) {
  Json j;
  j["N1"] = rep.N1;
  j["N2"] = rep.N2;
  j["N"] = rep.N;
  j["global_sign"] = rep.global_sign;
  j["status"] = rep.matched() ? "match" : "mismatch";
  j["max_discrepancy"] = rep.max_discrepancy;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cgr
