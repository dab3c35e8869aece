#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "liec.h"

using json = nlohmann::json;

namespace {

struct Ctx {
  liec_ctx* c;
  Ctx() : c(liec_ctx_new()) { REQUIRE(c != nullptr); }
  ~Ctx() { liec_ctx_free(c); }
};

// raw by reference: it is filled by the call in the first argument
json take(liec_status st, char*& raw) {
  REQUIRE(st == LIEC_OK);
  REQUIRE(raw != nullptr);
  json j = json::parse(raw);
  liec_string_free(raw);
  raw = nullptr;
  return j;
}

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(liec_version()) == "1.0.0");
}

TEST_CASE("roots info") {
  Ctx ctx;
  char* raw = nullptr;
  json j = take(liec_roots_info(ctx.c, "E8", &raw), raw);
  CHECK(j["roots"] == 240);
  CHECK(j["dim"] == 248);
  CHECK(j["highest_root"] == json::array({2, 3, 4, 6, 5, 4, 3, 2}));

  char* out = nullptr;
  CHECK(liec_roots_info(ctx.c, "E9", &out) == LIEC_EINVAL);
  CHECK(std::string(liec_last_error(ctx.c)).find("InvalidType") == 0);
}

TEST_CASE("diagram with marks") {
  Ctx ctx;
  char* raw = nullptr;
  json j = take(liec_diagram(ctx.c, "G2", 1, &raw), raw);
  CHECK(j["marks"] == json::array({1, 3, 2}));
  CHECK(j["nodes"].size() == 3);
}

TEST_CASE("regular subalgebra enumeration") {
  Ctx ctx;
  char* raw = nullptr;
  json j = take(liec_regular_subalgebras(ctx.c, "E8", &raw), raw);
  REQUIRE(j["results"].size() == 5);
  std::set<std::string> subs;
  for (auto& r : j["results"]) subs.insert(r["subalgebra"].get<std::string>());
  CHECK(subs == std::set<std::string>{"A1+E7", "A2+E6", "A4+A4", "A8", "D8"});
}

TEST_CASE("index requests across mechanisms") {
  Ctx ctx;
  char* raw = nullptr;
  json j = take(
      liec_index(ctx.c,
                 R"({"mechanism":"principal","ambient":"F4","exponents":[1,5,7,11]})",
                 &raw),
      raw);
  CHECK(j["values"] == json::array({156}));

  j = take(liec_index(ctx.c, R"({"mechanism":"branched","block":"so4<so5"})", &raw),
           raw);
  CHECK(j["values"] == json::array({1, 1}));

  j = take(liec_index(
               ctx.c,
               R"({"mechanism":"regular","ambient":"G2","factors":[[[1,0]],[[3,2]]]})",
               &raw),
           raw);
  CHECK(j["display"] == "(3,1)");

  j = take(liec_index(ctx.c,
                      R"({"mechanism":"chain","links":["sp2<sl4","sl4<sl8"]})", &raw),
           raw);
  CHECK(j["values"] == json::array({1}));

  j = take(liec_index(
               ctx.c,
               R"({"mechanism":"real","ambient":"su*_8","sub":["sp_{2,2}"]})", &raw),
           raw);
  CHECK(j["values"] == json::array({1}));

  char* out = nullptr;
  CHECK(liec_index(ctx.c, "{not json", &out) == LIEC_EPARSE);
  CHECK(liec_index(ctx.c, R"({"mechanism":"warp"})", &out) == LIEC_EPARSE);
}

TEST_CASE("oracle endpoint") {
  Ctx ctx;
  char* raw = nullptr;
  json j = take(liec_trace_form_oracle(ctx.c, "sl3+sl3<sl6", &raw), raw);
  CHECK(j["values"] == json::array({1, 1}));
}

TEST_CASE("space info") {
  Ctx ctx;
  char* raw = nullptr;
  json j = take(liec_space_info(ctx.c, "f4^{-20}", &raw), raw);
  CHECK(j["dim_p"] == 16);
  CHECK(j["space"]["type"] == "III");
  char* out = nullptr;
  CHECK(liec_space_info(ctx.c, "f9^9", &out) == LIEC_ENOTFOUND);
}

TEST_CASE("verification through the C API") {
  Ctx ctx;
  char* raw = nullptr;
  int mismatches = -1;
  json j = take(liec_verify(ctx.c, "all", &raw, &mismatches), raw);
  CHECK(mismatches == 0);
  CHECK(j["summary"]["mismatched"] == 0);
  CHECK(j["summary"]["checked"].get<int>() > 400);

  CHECK(liec_verify(ctx.c, "g2,badname", &raw, &mismatches) == LIEC_EPARSE);
}

TEST_CASE("export endpoints") {
  Ctx ctx;
  char* raw = nullptr;
  CHECK(liec_export(ctx.c, "dataset", "json", &raw) == LIEC_OK);
  json j = json::parse(raw);
  liec_string_free(raw);
  CHECK(j["tg"].size() == 160);
  CHECK(liec_export(ctx.c, "report", "csv", &raw) == LIEC_OK);
  std::string csv(raw);
  liec_string_free(raw);
  CHECK(csv.rfind("section,row,status,detail", 0) == 0);
  CHECK(liec_export(ctx.c, "nothing", "json", &raw) == LIEC_EPARSE);
}

TEST_CASE("context from explicit files") {
  liec_ctx* ctx = liec_ctx_new_with_paths(LIE_TEST_DATA_DIR "/realforms.cat",
                                          LIE_TEST_DATA_DIR "/atlas.dat");
  REQUIRE(ctx != nullptr);
  char* raw = nullptr;
  int mismatches = -1;
  liec_status st = liec_verify(ctx, "g2", &raw, &mismatches);
  CHECK(st == LIEC_OK);
  CHECK(mismatches == 0);
  liec_string_free(raw);
  liec_ctx_free(ctx);

  CHECK(liec_ctx_new_with_paths("/nonexistent.cat", nullptr) == nullptr);
}
