#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "cgrotor/cg_rotor.h"

using Json = nlohmann::json;

namespace {

struct Ctx {
  cgr_context* p;
  Ctx() : p(cgr_context_new()) {}
  ~Ctx() { cgr_context_free(p); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  cgr_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("backend and weight-cap configuration") {
  Ctx ctx;
  CHECK(cgr_set_backend(ctx.p, "float") == CGR_OK);
  CHECK(cgr_set_backend(ctx.p, "exact") == CGR_OK);
  CHECK(cgr_set_backend(ctx.p, "quantum") == CGR_ERR_USAGE);
  CHECK(std::strlen(cgr_last_error(ctx.p)) > 0);
  CHECK(cgr_set_max_weight(ctx.p, 6) == CGR_OK);
  char* out = nullptr;
  CHECK(cgr_cg_family(ctx.p, 7, 1, -1, "h", "json", &out) == CGR_ERR_DOMAIN);
  CHECK(out == nullptr);
}

TEST_CASE("cg family JSON carries the expected exact entries") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(cgr_cg_family(ctx.p, 1, 1, 2, "h", "json", &out) == CGR_OK);
  std::string raw = take(out);
  Json j = Json::parse(raw);
  CHECK(j.at("family").at("basis") == "h");
  const Json& g2 = j.at("matrices").at("+2");
  CHECK(g2.at("rows") == 3);
  const Json& corner = g2.at("entries").at(0).at(0);
  CHECK(corner.at("terms").at(0).at("num") == "1");
  CHECK(corner.at("terms").at(0).at("den") == "2");
  CHECK(corner.at("terms").at(0).at("rad") == 2);
  CHECK(corner.at("approx").get<double>() == doctest::Approx(0.7071067811865476));
  // repeated runs are byte-identical
  char* again = nullptr;
  REQUIRE(cgr_cg_family(ctx.p, 1, 1, 2, "h", "json", &again) == CGR_OK);
  CHECK(take(again) == raw);
}

TEST_CASE("e-basis and formats") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(cgr_cg_family(ctx.p, 1, 1, 1, "e", "json", &out) == CGR_OK);
  Json j = Json::parse(take(out));
  CHECK(j.at("family").at("basis") == "e");
  REQUIRE(cgr_cg_family(ctx.p, 1, 1, -1, "h", "latex", &out) == CGR_OK);
  CHECK(take(out).find("\\begin{pmatrix}") != std::string::npos);
  CHECK(cgr_cg_family(ctx.p, 1, 1, 2, "x", "json", &out) == CGR_ERR_USAGE);
}

TEST_CASE("rep matrices and angle handling") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(cgr_rep(ctx.p, 2, "m1", "pi", "json", &out) == CGR_OK);
  Json j = Json::parse(take(out));
  CHECK(j.at("entries").at(0).at(0).at("approx").get<double>() == doctest::Approx(-1.0));
  // degrees that reduce to pi/2
  REQUIRE(cgr_rep(ctx.p, 1, "0", "90", "json", &out) == CGR_OK);
  take(out);
  // non-crystallographic angle on the exact backend
  CHECK(cgr_rep(ctx.p, 2, "m1", "pi/5", "json", &out) == CGR_ERR_DOMAIN);
  CHECK(std::string(cgr_last_error(ctx.p)).find("float") != std::string::npos);
  REQUIRE(cgr_set_backend(ctx.p, "float") == CGR_OK);
  REQUIRE(cgr_rep(ctx.p, 2, "m1", "pi/5", "json", &out) == CGR_OK);
  take(out);
}

TEST_CASE("verification endpoint") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(cgr_verify(ctx.p, 2, &out) == CGR_OK);
  Json j = Json::parse(take(out));
  CHECK(j.at("mismatches") == 0);
  CHECK(j.at("reports").size() > 0);
}

TEST_CASE("crystal endpoints") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(cgr_crystal_system(ctx.p, "monoclinic", &out) == CGR_OK);
  Json j = Json::parse(take(out));
  CHECK(j.at("count") == 13);
  CHECK(cgr_crystal_system(ctx.p, "cubic-ish", &out) == CGR_ERR_DOMAIN);
  // explicit generators: the rhombic pair
  const char* gens = R"({"generators": [
    [[-1,0,0],[0,-1,0],[0,0,1]],
    [[-1,0,0],[0,1,0],[0,0,-1]]
  ]})";
  REQUIRE(cgr_crystal_generators(ctx.p, gens, &out) == CGR_OK);
  Json jr = Json::parse(take(out));
  CHECK(jr.at("count") == 9);
}

TEST_CASE("invariants endpoint") {
  Ctx ctx;
  char* out = nullptr;
  const char* in = R"({"tensor": [[1,0,0],[0,0,0],[0,0,-1]]})";
  REQUIRE(cgr_invariants(ctx.p, in, &out) == CGR_OK);
  Json j = Json::parse(take(out));
  CHECK(j.at("p").at("terms").empty());
  CHECK(j.at("I0").at("approx").get<double>() == doctest::Approx(2.0));
  CHECK(cgr_invariants(ctx.p, "{}", &out) == CGR_ERR_DOMAIN);
}

TEST_CASE("elasticity endpoints") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(cgr_elasticity_assemble(ctx.p, R"({"lambda": 2, "mu": 1, "density": 1})", &out) ==
          CGR_OK);
  Json j = Json::parse(take(out));
  CHECK(j.at("hyperbolic") == true);
  CHECK(j.at("A_hat").at("entries").at(0).at(0).at("approx").get<double>() ==
        doctest::Approx(0.125));
  REQUIRE(cgr_elasticity_speeds(
              ctx.p, R"({"lambda": 2, "mu": 1, "density": 1, "direction": [0, 0, 1]})",
              &out) == CGR_OK);
  Json s = Json::parse(take(out));
  REQUIRE(s.at("speeds").size() == 9);
  CHECK(s.at("speeds").at(8).get<double>() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(s.at("speeds").at(7).get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(cgr_elasticity_speeds(ctx.p, R"({"mu": 1, "direction": [0,0,1]})", &out) ==
        CGR_ERR_DOMAIN);
}

TEST_CASE("malformed JSON is a usage error") {
  Ctx ctx;
  char* out = nullptr;
  CHECK(cgr_invariants(ctx.p, "{not json", &out) == CGR_ERR_USAGE);
}
