#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <thread>

#include "skew/skew.h"

namespace {

struct Handle {
  skw_presentation* p = nullptr;
  ~Handle() { skw_presentation_free(p); }
};

}  // namespace

TEST_CASE("version") { CHECK(skw_api_version() == SKW_API_VERSION); }

TEST_CASE("parse and inspect") {
  Handle h;
  REQUIRE(skw_presentation_parse("generators: a b\nb a = a b\n", &h.p) == SKW_OK);
  CHECK(skw_presentation_generator_count(h.p) == 2);
  CHECK(std::string(skw_last_error()).empty());

  Handle bad;
  CHECK(skw_presentation_parse("generators: a b\n", &bad.p) == SKW_ERR_PARSE);
  CHECK(bad.p == nullptr);
  CHECK(std::string(skw_last_error()).find("missing") != std::string::npos);
  CHECK(skw_presentation_parse(nullptr, &bad.p) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_presentation_generator_count(nullptr) == 0);
}

TEST_CASE("builtins and loading") {
  Handle h;
  REQUIRE(skw_presentation_builtin("ex_c", &h.p) == SKW_OK);
  CHECK(skw_presentation_generator_count(h.p) == 4);
  Handle missing;
  CHECK(skw_presentation_builtin("ex_q", &missing.p) == SKW_ERR_INVALID_ARGUMENT);
  Handle loaded;
  CHECK(skw_presentation_load("builtin:ex_b", &loaded.p) == SKW_OK);
  Handle nofile;
  CHECK(skw_presentation_load("/nonexistent/x.skw", &nofile.p) == SKW_ERR_IO);
}

TEST_CASE("canonical form") {
  Handle h;
  REQUIRE(skw_presentation_builtin("ex_c", &h.p) == SKW_OK);
  char* out = nullptr;
  size_t size = 0;
  REQUIRE(skw_canonical(h.p, "x3 x4 x3", &out, &size) == SKW_OK);
  CHECK(std::string(out) == "x1 x2 x4");
  CHECK(size == 18);
  skw_string_free(out);
  REQUIRE(skw_canonical(h.p, "x4 x4", &out, &size) == SKW_OK);
  CHECK(std::string(out) == "x4 x4");
  CHECK(size == 1);
  skw_string_free(out);
  CHECK(skw_canonical(h.p, "x7", &out, &size) == SKW_ERR_PARSE);
  CHECK(out == nullptr);
}

TEST_CASE("analyze") {
  Handle h;
  REQUIRE(skw_presentation_builtin("ex_c", &h.p) == SKW_OK);
  skw_analyze_options opts;
  skw_analyze_options_init(&opts);
  opts.max_degree = 6;
  opts.use_environment = 0;
  char* json = nullptr;
  int overall = -1;
  REQUIRE(skw_analyze(h.p, &opts, &json, &overall) == SKW_OK);
  const auto j = nlohmann::json::parse(json);
  skw_string_free(json);
  CHECK(j["schema_version"] == 1);
  CHECK(j["flags"]["cyclic"] == true);
  CHECK(j["budgets"]["max_degree"] == 6);
  CHECK(overall == SKW_VERIFIED);

  opts.check = "nonsense";
  CHECK(skw_analyze(h.p, &opts, &json, &overall) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(json == nullptr);
}

TEST_CASE("corpus") {
  char* json = nullptr;
  REQUIRE(skw_corpus_json(&json) == SKW_OK);
  const auto j = nlohmann::json::parse(json);
  skw_string_free(json);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["label"] == "EX_A");
  CHECK(j[3]["relations"][0] == "x2 x1 = x1 x3");
}

TEST_CASE("last error is per thread") {
  Handle bad;
  CHECK(skw_presentation_parse("nonsense", &bad.p) == SKW_ERR_PARSE);
  std::string other = "unset";
  std::thread t([&] { other = skw_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(skw_last_error()).empty());
}
