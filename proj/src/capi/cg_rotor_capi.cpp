#include "cgrotor/cg_rotor.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <type_traits>
#include <string>

#include "io/json_io.hpp"

#if defined(_WIN32)
#define CGR_EXPORT __declspec(dllexport)
#else
#define CGR_EXPORT __attribute__((visibility("default")))
#endif

namespace {

using namespace cgr;

enum class Backend { Exact, Float };

struct VerifyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

struct cgr_context {
  Backend backend = Backend::Exact;
  int max_weight = 12;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cgr_status run(cgr_context* ctx, char** out, const std::function<std::string()>& fn) {
  if (ctx == nullptr) return CGR_ERR_USAGE;
  ctx->last_error.clear();
  if (out == nullptr) {
    ctx->last_error = "null output pointer";
    return CGR_ERR_USAGE;
  }
  *out = nullptr;
  try {
    *out = dup_string(fn());
    return CGR_OK;
  } catch (const VerifyMismatch& e) {
    *out = dup_string(e.what());  // the report still goes to the caller
    return CGR_ERR_VERIFY;
  } catch (const unsupported_divisor& e) {
    ctx->last_error = e.what();
    return CGR_ERR_DOMAIN;
  } catch (const std::domain_error& e) {
    ctx->last_error = e.what();
    return CGR_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return CGR_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    return CGR_ERR_DOMAIN;
  } catch (const std::logic_error& e) {
    ctx->last_error = e.what();
    return CGR_ERR_INTERNAL;
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = e.what();
    return CGR_ERR_USAGE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CGR_ERR_INTERNAL;
  }
}

void check_weight_cap(const cgr_context& ctx, int N) {
  if (N > ctx.max_weight)
    throw std::domain_error("weight " + std::to_string(N) + " exceeds the cap of " +
                            std::to_string(ctx.max_weight) +
                            " (raise it with --max-weight)");
}

// Angle strings: "pi", "pi/2", "2pi/3", "-pi/6", or plain degrees.
struct ParsedAngle {
  bool is_pi_fraction = false;
  Rational over_pi;   // angle / pi when is_pi_fraction
  double radians = 0; // always filled
};

ParsedAngle parse_angle(const std::string& text) {
  ParsedAngle a;
  auto pi_pos = text.find("pi");
  if (pi_pos != std::string::npos) {
    std::string head = text.substr(0, pi_pos);
    std::string tail = text.substr(pi_pos + 2);
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
      neg = head[0] == '-';
      head = head.substr(1);
    }
    Int num = head.empty() ? Int(1) : Int(head);
    Int den(1);
    if (!tail.empty()) {
      if (tail[0] != '/') throw std::domain_error("bad angle syntax: " + text);
      den = Int(tail.substr(1));
    }
    a.is_pi_fraction = true;
    a.over_pi = Rational(neg ? -num : num, den);
    a.radians = to_double(a.over_pi) * 3.14159265358979323846;
    return a;
  }
  size_t idx = 0;
  double deg = std::stod(text, &idx);
  if (idx != text.size() && text.substr(idx) != "deg")
    throw std::domain_error("bad angle syntax: " + text);
  a.radians = deg * 3.14159265358979323846 / 180.0;
  // Degrees that are multiples of 30 or 45 stay exact.
  double q = deg / 180.0;
  double r = std::round(q * 12.0);
  if (std::abs(q * 12.0 - r) < 1e-12) {
    long k = static_cast<long>(r);
    if (k % 2 == 0 || k % 3 == 0) {
      a.is_pi_fraction = true;
      a.over_pi = Rational(k, 12);
    }
  }
  return a;
}

Axis parse_axis(const std::string& s) {
  if (s == "m1" || s == "-1" || s == "x-1") return Axis::Xm1;
  if (s == "0" || s == "x0") return Axis::X0;
  if (s == "p1" || s == "1" || s == "+1" || s == "x1") return Axis::Xp1;
  throw std::invalid_argument("axis must be m1, 0 or p1");
}

enum class Format { JsonFmt, TextFmt, LatexFmt };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::JsonFmt;
  if (s == "text") return Format::TextFmt;
  if (s == "latex") return Format::LatexFmt;
  throw std::invalid_argument("format must be json, text or latex");
}

template <class S>
std::string render_family_h(int N1, int N2, const std::vector<int>& ns, Format fmt) {
  if (fmt == Format::JsonFmt) {
    if (ns.size() == 1) {
      // single decomposition weight
      auto fam = compute_family_h<S>(N1, N2, ns[0]);
      return dump_json(family_json(*fam));
    }
    Json j = Json::array();
    for (int N : ns) j.push_back(family_json(*compute_family_h<S>(N1, N2, N)));
    return dump_json(Json{{"families", std::move(j)}});
  }
  std::string out;
  for (int N : ns) {
    auto fam = compute_family_h<S>(N1, N2, N);
    for (int n = -N; n <= N; ++n) {
      out += "G^{" + signed_key(n) + "}_{" + std::to_string(N) + "[" + std::to_string(N1) +
             "," + std::to_string(N2) + "]}\n";
      out += (fmt == Format::TextFmt) ? matrix_text(fam->at(n)) : matrix_latex(fam->at(n));
      out += "\n";
    }
  }
  return out;
}

template <class S>
std::string render_family_e(int N1, int N2, const std::vector<int>& ns, Format fmt) {
  if (fmt == Format::JsonFmt) {
    if (ns.size() == 1) {
      CgFamilyE<S> fam = compute_family_e<S>(N1, N2, ns[0]);
      return dump_json(family_json(fam));
    }
    Json j = Json::array();
    for (int N : ns) j.push_back(family_json(compute_family_e<S>(N1, N2, N)));
    return dump_json(Json{{"families", std::move(j)}});
  }
  std::string out;
  for (int N : ns) {
    CgFamilyE<S> fam = compute_family_e<S>(N1, N2, N);
    for (int n = -N; n <= N; ++n) {
      out += "C^{" + signed_key(n) + "}_{" + std::to_string(N) + "[" + std::to_string(N1) +
             "," + std::to_string(N2) + "]}\n";
      out += (fmt == Format::TextFmt) ? matrix_text(fam.at(n)) : matrix_latex(fam.at(n));
      out += "\n";
    }
  }
  return out;
}

template <class S>
Vec<S> vec_from_json(const Json& arr, int weight, S (*scalar)(const Json&)) {
  if (!arr.is_array() || arr.size() != static_cast<size_t>(2 * weight + 1))
    throw std::domain_error("expected an array of " + std::to_string(2 * weight + 1) +
                            " scalars");
  Vec<S> v(weight);
  for (int i = 0; i < v.dim(); ++i) v.at(i) = scalar(arr.at(i));
  return v;
}

Radical exact_scalar(const Json& j) { return radical_from_json(j); }
Approx float_scalar(const Json& j) { return approx_from_json(j); }

template <class S>
MaterialCoefficients<S> coeffs_from_json(const Json& j, S (*scalar)(const Json&)) {
  MaterialCoefficients<S> m;
  m.c1 = j.contains("c1") ? scalar(j.at("c1")) : S::one();
  m.c2 = j.contains("c2") ? scalar(j.at("c2")) : S::one();
  if (j.contains("a")) m.a = vec_from_json<S>(j.at("a"), 2, scalar);
  if (j.contains("b")) m.b = vec_from_json<S>(j.at("b"), 2, scalar);
  if (j.contains("d")) m.d = vec_from_json<S>(j.at("d"), 4, scalar);
  return m;
}

// Certifies that the coefficient blocks are fixed vectors of the named
// crystal system's generators.
template <class S>
void validate_system_coeffs(const std::string& system, const MaterialCoefficients<S>& m) {
  CrystalGenerators gens = crystal_preset(system);
  for (const Matrix<Radical>& gx : gens.generators) {
    Matrix<S> g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if constexpr (std::is_same_v<S, Radical>)
          g.at(i, j) = gx.at(i, j);
        else
          g.at(i, j) = S(gx.at(i, j).approx());
      }
    Matrix<S> r2t = rep_matrix(2, g).transpose();
    Matrix<S> r4t = rep_matrix(4, g).transpose();
    if (!(r2t * m.a == m.a) || !(r2t * m.b == m.b) || !(r4t * m.d == m.d))
      throw std::domain_error("coefficients are not invariant under the " + system +
                              " generators");
  }
}

template <class S>
HyperbolicModel<S> model_from_json(const Json& params, S (*scalar)(const Json&)) {
  S density = params.contains("density") ? scalar(params.at("density")) : S::one();
  HyperbolicModel<S> model{density, MaterialCoefficients<S>{},
                           calibrate_delta_constants<S>()};
  if (params.contains("lambda") || params.contains("mu")) {
    if (!params.contains("lambda") || !params.contains("mu"))
      throw std::domain_error("isotropic parameters need both lambda and mu");
    model = HyperbolicModel<S>::isotropic(scalar(params.at("lambda")),
                                          scalar(params.at("mu")), density);
    if (params.contains("coeffs"))
      model.material = coeffs_from_json<S>(params.at("coeffs"), scalar);
  } else if (params.contains("coeffs")) {
    model.material = coeffs_from_json<S>(params.at("coeffs"), scalar);
  } else {
    throw std::domain_error("provide lambda/mu or an explicit coeffs block");
  }
  if (params.contains("system"))
    validate_system_coeffs<S>(params.at("system").get<std::string>(), model.material);
  return model;
}

template <class S>
std::string invariants_string(const Json& in, S (*scalar)(const Json&)) {
  S p{};
  Vec<S> s(2);
  if (in.contains("tensor")) {
    const Json& t = in.at("tensor");
    if (!t.is_array() || t.size() != 3) throw std::domain_error("tensor must be 3 rows");
    Matrix<S> m(3, 3);
    for (int i = 0; i < 3; ++i) {
      if (!t.at(i).is_array() || t.at(i).size() != 3)
        throw std::domain_error("tensor rows must have 3 entries");
      for (int j = 0; j < 3; ++j) m.at(i, j) = scalar(t.at(i).at(j));
    }
    auto parts = deviator_decompose(m);
    p = parts.p;
    s = parts.s;
  } else if (in.contains("p") && in.contains("s")) {
    p = scalar(in.at("p"));
    s = vec_from_json<S>(in.at("s"), 2, scalar);
  } else {
    throw std::domain_error("provide a tensor or p and s");
  }
  MaterialCoefficients<S> m;
  m.c1 = S::one();
  m.c2 = S::one();
  if (in.contains("coeffs")) m = coeffs_from_json<S>(in.at("coeffs"), scalar);
  QuadraticInvariants<S> q = quadratic_invariants(p, s, m);
  Json j;
  j["p"] = scalar_json(p);
  Json sv = Json::array();
  for (int i = 0; i < 5; ++i) sv.push_back(scalar_json(s.at(i)));
  j["s"] = std::move(sv);
  j["J0"] = scalar_json(q.j0);
  j["J1"] = scalar_json(q.j1);
  j["I0"] = scalar_json(q.i0);
  j["I1"] = scalar_json(q.i1);
  j["I2"] = scalar_json(q.i2);
  j["energy"] = scalar_json(q.total());
  return dump_json(j);
}

}  // namespace

extern "C" {

CGR_EXPORT cgr_context* cgr_context_new(void) { return new cgr_context(); }

CGR_EXPORT void cgr_context_free(cgr_context* ctx) { delete ctx; }

CGR_EXPORT cgr_status cgr_set_backend(cgr_context* ctx, const char* backend) {
  if (ctx == nullptr || backend == nullptr) return CGR_ERR_USAGE;
  std::string b = backend;
  if (b == "exact")
    ctx->backend = Backend::Exact;
  else if (b == "float")
    ctx->backend = Backend::Float;
  else {
    ctx->last_error = "backend must be exact or float";
    return CGR_ERR_USAGE;
  }
  return CGR_OK;
}

CGR_EXPORT cgr_status cgr_set_max_weight(cgr_context* ctx, int max_weight) {
  if (ctx == nullptr) return CGR_ERR_USAGE;
  if (max_weight < 0 || max_weight > 64) {
    ctx->last_error = "max weight must be in [0, 64]";
    return CGR_ERR_USAGE;
  }
  ctx->max_weight = max_weight;
  return CGR_OK;
}

CGR_EXPORT const char* cgr_last_error(const cgr_context* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

CGR_EXPORT void cgr_string_free(char* s) { std::free(s); }

CGR_EXPORT cgr_status cgr_cg_family(cgr_context* ctx, int n1, int n2, int n,
                                    const char* basis, const char* format, char** out) {
  return run(ctx, out, [&]() -> std::string {
    check_weight(n1);
    check_weight(n2);
    check_weight_cap(*ctx, n1);
    check_weight_cap(*ctx, n2);
    std::vector<int> ns;
    if (n >= 0) {
      check_triangle(n, n1, n2);
      ns.push_back(n);
    } else {
      for (int N = std::abs(n1 - n2); N <= n1 + n2; ++N) ns.push_back(N);
    }
    Format fmt = parse_format(format ? format : "json");
    std::string b = basis ? basis : "h";
    if (b == "h") {
      return ctx->backend == Backend::Exact ? render_family_h<Radical>(n1, n2, ns, fmt)
                                            : render_family_h<Approx>(n1, n2, ns, fmt);
    }
    if (b == "e") {
      return ctx->backend == Backend::Exact ? render_family_e<Radical>(n1, n2, ns, fmt)
                                            : render_family_e<Approx>(n1, n2, ns, fmt);
    }
    throw std::invalid_argument("basis must be h or e");
  });
}

CGR_EXPORT cgr_status cgr_rep(cgr_context* ctx, int weight, const char* axis,
                              const char* angle, const char* format, char** out) {
  return run(ctx, out, [&]() -> std::string {
    check_weight(weight);
    check_weight_cap(*ctx, weight);
    Axis ax = parse_axis(axis ? axis : "");
    ParsedAngle ang = parse_angle(angle ? angle : "");
    Format fmt = parse_format(format ? format : "json");
    if (ctx->backend == Backend::Exact) {
      if (!ang.is_pi_fraction)
        throw std::domain_error(
            "the exact backend needs an angle that is a multiple of pi/6 or pi/4; "
            "rerun with --backend float");
      Matrix<Radical> rho = rep_matrix(weight, rotation_exact(ax, ang.over_pi));
      if (fmt == Format::JsonFmt) return dump_json(matrix_json(rho));
      return fmt == Format::TextFmt ? matrix_text(rho) : matrix_latex(rho);
    }
    Matrix<Approx> rho = rep_matrix(weight, rotation_float(ax, ang.radians));
    if (fmt == Format::JsonFmt) return dump_json(matrix_json(rho));
    return fmt == Format::TextFmt ? matrix_text(rho) : matrix_latex(rho);
  });
}

CGR_EXPORT cgr_status cgr_verify(cgr_context* ctx, int max_weight, char** out) {
  return run(ctx, out, [&]() -> std::string {
    if (max_weight < 0) throw std::domain_error("max weight must be nonnegative");
    check_weight_cap(*ctx, max_weight);
    Json reports = Json::array();
    int mismatches = 0;
    for (int n1 = 0; n1 <= max_weight; ++n1)
      for (int n2 = 0; n2 <= max_weight; ++n2)
        for (int N = std::abs(n1 - n2); N <= n1 + n2; ++N) {
          OracleReport rep = ctx->backend == Backend::Exact
                                 ? verify_family<Radical>(n1, n2, N)
                                 : verify_family<Approx>(n1, n2, N);
          if (!rep.matched()) ++mismatches;
          reports.push_back(oracle_report_json(rep));
        }
    std::string text =
        dump_json(Json{{"max_weight", max_weight},
                       {"families", reports.size()},
                       {"mismatches", mismatches},
                       {"reports", std::move(reports)}});
    if (mismatches > 0) throw VerifyMismatch(text);
    return text;
  });
}

CGR_EXPORT cgr_status cgr_crystal_system(cgr_context* ctx, const char* system, char** out) {
  return run(ctx, out, [&]() -> std::string {
    CrystalReduction<Radical> red = crystal_reduce_preset(system ? system : "");
    return dump_json(crystal_json(red));
  });
}

CGR_EXPORT cgr_status cgr_crystal_generators(cgr_context* ctx, const char* generators_json,
                                             char** out) {
  return run(ctx, out, [&]() -> std::string {
    Json j = Json::parse(generators_json ? generators_json : "");
    if (!j.contains("generators")) throw std::domain_error("missing generators array");
    std::vector<Matrix<Radical>> gens;
    for (const Json& gj : j.at("generators")) {
      if (!gj.is_array() || gj.size() != 3) throw std::domain_error("generators must be 3x3");
      Matrix<Radical> g(3, 3);
      for (int r = 0; r < 3; ++r) {
        if (!gj.at(r).is_array() || gj.at(r).size() != 3)
          throw std::domain_error("generators must be 3x3");
        for (int c = 0; c < 3; ++c) g.at(r, c) = radical_from_json(gj.at(r).at(c));
      }
      gens.push_back(std::move(g));
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
    return dump_json(crystal_json(crystal_reduce(name, gens)));
  });
}

CGR_EXPORT cgr_status cgr_invariants(cgr_context* ctx, const char* input_json, char** out) {
  return run(ctx, out, [&]() -> std::string {
    Json in = Json::parse(input_json ? input_json : "");
    return ctx->backend == Backend::Exact ? invariants_string<Radical>(in, exact_scalar)
                                          : invariants_string<Approx>(in, float_scalar);
  });
}

CGR_EXPORT cgr_status cgr_elasticity_assemble(cgr_context* ctx, const char* params_json,
                                              char** out) {
  return run(ctx, out, [&]() -> std::string {
    Json params = Json::parse(params_json ? params_json : "");
    if (ctx->backend == Backend::Exact)
      return dump_json(model_json(model_from_json<Radical>(params, exact_scalar)));
    return dump_json(model_json(model_from_json<Approx>(params, float_scalar)));
  });
}

CGR_EXPORT cgr_status cgr_elasticity_speeds(cgr_context* ctx, const char* params_json,
                                            char** out) {
  return run(ctx, out, [&]() -> std::string {
    Json params = Json::parse(params_json ? params_json : "");
    if (!params.contains("direction")) throw std::domain_error("missing direction");
    const Json& dir = params.at("direction");
    if (!dir.is_array() || dir.size() != 3)
      throw std::domain_error("direction must have 3 components");
    std::vector<double> speeds;
    if (ctx->backend == Backend::Exact) {
      HyperbolicModel<Radical> model = model_from_json<Radical>(params, exact_scalar);
      std::array<Radical, 3> k{radical_from_json(dir.at(0)), radical_from_json(dir.at(1)),
                               radical_from_json(dir.at(2))};
      speeds = plane_wave_speeds(model, k);
    } else {
      HyperbolicModel<Approx> model = model_from_json<Approx>(params, float_scalar);
      std::array<Approx, 3> k{approx_from_json(dir.at(0)), approx_from_json(dir.at(1)),
                              approx_from_json(dir.at(2))};
      speeds = plane_wave_speeds(model, k);
    }
    Json j;
    j["direction"] = dir;
    j["speeds"] = speeds;
    return dump_json(j);
  });
}

}  // extern "C"
