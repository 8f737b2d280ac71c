// cg-rotor: command-line front end over the cgrotor C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgrotor/cg_rotor.h"

namespace {

using Json = nlohmann::json;

struct Common {
  std::string backend = "exact";
  std::string format = "json";
  std::string output;
  int max_weight = 12;
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("--backend", c.backend, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  if (with_format)
    cmd->add_option("--format", c.format, "json, text or latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
  cmd->add_option("--output", c.output, "write the result to a file instead of stdout");
  cmd->add_option("--max-weight", c.max_weight, "cap on representation weights");
}

class Ctx {
 public:
  explicit Ctx(const Common& c) : ctx_(cgr_context_new()) {
    std::string backend = c.backend;
    if (const char* env = std::getenv("CG_ROTOR_BACKEND")) backend = env;
    if (cgr_set_backend(ctx_, backend.c_str()) != CGR_OK) {
      std::cerr << "error: " << cgr_last_error(ctx_) << "\n";
      std::exit(64);
    }
    cgr_set_max_weight(ctx_, c.max_weight);
  }
  ~Ctx() { cgr_context_free(ctx_); }
  cgr_context* get() { return ctx_; }

 private:
  cgr_context* ctx_;
};

int emit(const Common& c, cgr_status st, char* result, cgr_context* ctx) {
  if (result != nullptr) {
    if (!c.output.empty()) {
      std::ofstream f(c.output, std::ios::binary);
      f << result;
    } else {
      std::fputs(result, stdout);
    }
    cgr_string_free(result);
  }
  if (st != CGR_OK && result == nullptr) std::cerr << "error: " << cgr_last_error(ctx) << "\n";
  switch (st) {
    case CGR_OK: return 0;
    case CGR_ERR_VERIFY: return 2;
    case CGR_ERR_USAGE: return 64;
    default: return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(64);
  }
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Pretty table for `verify`; the JSON report stays available via --format json.
void print_verify_table(const std::string& json_text) {
  Json j = Json::parse(json_text);
  std::printf("%4s %4s %4s  %6s  %-8s  %s\n", "N1", "N2", "N", "sign", "status", "max|diff|");
  for (const Json& r : j.at("reports")) {
    std::printf("%4d %4d %4d  %+6d  %-8s  %.3g\n", r.at("N1").get<int>(), r.at("N2").get<int>(),
                r.at("N").get<int>(), r.at("global_sign").get<int>(),
                r.at("status").get<std::string>().c_str(),
                r.at("max_discrepancy").get<double>());
  }
  std::printf("families: %d  mismatches: %d\n", static_cast<int>(j.at("families").get<size_t>()),
              j.at("mismatches").get<int>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clebsch-Gordan matrices for SO(3) and their elasticity applications"};
  app.require_subcommand(1);

  // cg
  Common cg_c;
  int cg_n1 = 0, cg_n2 = 0, cg_n = -1;
  std::string cg_basis = "h";
  CLI::App* cg = app.add_subcommand("cg", "Clebsch-Gordan family for a weight pair");
  cg->add_option("--n1", cg_n1, "first weight")->required();
  cg->add_option("--n2", cg_n2, "second weight")->required();
  cg->add_option("--n", cg_n, "decomposition weight (default: all admissible)");
  cg->add_option("--basis", cg_basis, "h (real) or e (complex)")
      ->check(CLI::IsMember({"h", "e"}));
  add_common(cg, cg_c);

  // rep
  Common rep_c;
  int rep_weight = 1;
  std::string rep_axis = "m1", rep_angle;
  CLI::App* rep = app.add_subcommand("rep", "representation matrix of an axis rotation");
  rep->add_option("--weight", rep_weight, "representation weight")->required();
  rep->add_option("--axis", rep_axis, "m1, 0 or p1")->required();
  rep->add_option("--angle", rep_angle, "pi fraction like pi/2 or 2pi/3, or degrees")
      ->required();
  add_common(rep, rep_c);

  // verify
  Common ver_c;
  ver_c.format = "text";
  int ver_max = 3;
  CLI::App* ver = app.add_subcommand("verify", "cross-check families against the Racah oracle");
  ver->add_option("--max-weight", ver_max, "largest N1, N2 to verify");
  ver->add_option("--backend", ver_c.backend, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  ver->add_option("--format", ver_c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--output", ver_c.output, "write the result to a file");

  // crystal
  Common cry_c;
  std::string cry_system, cry_generators;
  CLI::App* cry = app.add_subcommand("crystal", "material-parameter reduction for a crystal system");
  cry->add_option("--system", cry_system,
                  "triclinic|monoclinic|rhombic|tetragonal|trigonal|hexagonal|cubic|isotropic");
  cry->add_option("--generators", cry_generators, "JSON file with explicit 3x3 generators");
  add_common(cry, cry_c, false);

  // invariants
  Common inv_c;
  std::string inv_tensor, inv_p, inv_s, inv_coeffs;
  CLI::App* inv = app.add_subcommand("invariants", "deviator split and quadratic invariants");
  inv->add_option("--tensor", inv_tensor, "nine comma-separated entries, row major");
  inv->add_option("--p", inv_p, "pressure (with --s)");
  inv->add_option("--s", inv_s, "five comma-separated deviator components");
  inv->add_option("--coeffs", inv_coeffs, "JSON file with material coefficients");
  add_common(inv, inv_c, false);

  // elasticity
  CLI::App* ela = app.add_subcommand("elasticity", "invariant symmetric-hyperbolic system");
  ela->require_subcommand(1);
  Common asm_c;
  double asm_lambda = 0, asm_mu = 0, asm_density = 1;
  bool asm_have_lm = false;
  std::string asm_coeffs, asm_system;
  CLI::App* easm = ela->add_subcommand("assemble", "assemble the 9x9 system");
  easm->add_option("--lambda", asm_lambda, "Lame lambda");
  easm->add_option("--mu", asm_mu, "Lame mu");
  easm->add_option("--density", asm_density, "mass density");
  easm->add_option("--coeffs", asm_coeffs, "JSON file with material coefficients");
  easm->add_option("--system", asm_system, "unused label recorded in the output");
  add_common(easm, asm_c, false);

  Common spd_c;
  double spd_lambda = 0, spd_mu = 0, spd_density = 1;
  std::string spd_dir = "0,0,1", spd_coeffs;
  CLI::App* espd = ela->add_subcommand("speeds", "plane-wave characteristic speeds");
  espd->add_option("--lambda", spd_lambda, "Lame lambda");
  espd->add_option("--mu", spd_mu, "Lame mu");
  espd->add_option("--density", spd_density, "mass density");
  espd->add_option("--direction", spd_dir, "x,y,z direction (normalized internally)");
  espd->add_option("--coeffs", spd_coeffs, "JSON file with material coefficients");
  add_common(espd, spd_c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  auto number_or_exact = [](double v) -> Json {
    long long r = std::llround(v);
    if (static_cast<double>(r) == v) return Json(r);
    return Json(v);
  };
  auto split_numbers = [](const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  };

  if (cg->parsed()) {
    Ctx ctx(cg_c);
    char* res = nullptr;
    cgr_status st = cgr_cg_family(ctx.get(), cg_n1, cg_n2, cg_n, cg_basis.c_str(),
                                  cg_c.format.c_str(), &res);
    return emit(cg_c, st, res, ctx.get());
  }

  if (rep->parsed()) {
    Ctx ctx(rep_c);
    char* res = nullptr;
    cgr_status st = cgr_rep(ctx.get(), rep_weight, rep_axis.c_str(), rep_angle.c_str(),
                            rep_c.format.c_str(), &res);
    return emit(rep_c, st, res, ctx.get());
  }

  if (ver->parsed()) {
    Ctx ctx(ver_c);
    char* res = nullptr;
    cgr_status st = cgr_verify(ctx.get(), ver_max, &res);
    if (res != nullptr && ver_c.format == "text" && ver_c.output.empty()) {
      print_verify_table(res);
      cgr_string_free(res);
      return st == CGR_OK ? 0 : (st == CGR_ERR_VERIFY ? 2 : 1);
    }
    return emit(ver_c, st, res, ctx.get());
  }

  if (cry->parsed()) {
    Ctx ctx(cry_c);
    char* res = nullptr;
    cgr_status st;
    if (!cry_generators.empty()) {
      std::string body = read_file(cry_generators);
      st = cgr_crystal_generators(ctx.get(), body.c_str(), &res);
    } else if (!cry_system.empty()) {
      st = cgr_crystal_system(ctx.get(), cry_system.c_str(), &res);
    } else {
      std::cerr << "error: provide --system or --generators\n";
      return 64;
    }
    return emit(cry_c, st, res, ctx.get());
  }

  if (inv->parsed()) {
    Ctx ctx(inv_c);
    Json in;
    if (!inv_tensor.empty()) {
      auto v = split_numbers(inv_tensor);
      if (v.size() != 9) {
        std::cerr << "error: --tensor needs nine entries\n";
        return 64;
      }
      Json t = Json::array();
      for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(number_or_exact(v[3 * i + j]));
        t.push_back(row);
      }
      in["tensor"] = t;
    } else if (!inv_p.empty() && !inv_s.empty()) {
      in["p"] = number_or_exact(std::stod(inv_p));
      Json s = Json::array();
      for (double x : split_numbers(inv_s)) s.push_back(number_or_exact(x));
      if (s.size() != 5) {
        std::cerr << "error: --s needs five components\n";
        return 64;
      }
      in["s"] = s;
    } else {
      std::cerr << "error: provide --tensor or both --p and --s\n";
      return 64;
    }
    if (!inv_coeffs.empty()) in["coeffs"] = Json::parse(read_file(inv_coeffs));
    char* res = nullptr;
    cgr_status st = cgr_invariants(ctx.get(), in.dump().c_str(), &res);
    return emit(inv_c, st, res, ctx.get());
  }

  if (easm->parsed() || espd->parsed()) {
    bool speeds = espd->parsed();
    const Common& common = speeds ? spd_c : asm_c;
    Ctx ctx(common);
    Json params;
    double lambda = speeds ? spd_lambda : asm_lambda;
    double mu = speeds ? spd_mu : asm_mu;
    double density = speeds ? spd_density : asm_density;
    std::string coeffs = speeds ? spd_coeffs : asm_coeffs;
    if ((speeds ? espd : easm)->count("--lambda") > 0) {
      params["lambda"] = number_or_exact(lambda);
      params["mu"] = number_or_exact(mu);
    }
    params["density"] = number_or_exact(density);
    if (!coeffs.empty()) params["coeffs"] = Json::parse(read_file(coeffs));
    char* res = nullptr;
    cgr_status st;
    if (speeds) {
      auto d = split_numbers(spd_dir);
      if (d.size() != 3) {
        std::cerr << "error: --direction needs three components\n";
        return 64;
      }
      Json dir = Json::array();
      for (double x : d) dir.push_back(number_or_exact(x));
      params["direction"] = dir;
      st = cgr_elasticity_speeds(ctx.get(), params.dump().c_str(), &res);
    } else {
      st = cgr_elasticity_assemble(ctx.get(), params.dump().c_str(), &res);
    }
    return emit(common, st, res, ctx.get());
  }

  return 64;
}
