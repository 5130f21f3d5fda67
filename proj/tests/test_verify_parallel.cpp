#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <tstar/parallel.hpp>
#include <tstar/verify.hpp>

using namespace tstar;
using namespace tstar::verify;

TEST_CASE("parallel map is deterministic and forwards exceptions") {
  auto square = [](long i) { return i * i; };
  std::vector<long> serial = par::map_indexed<long>(500, false, square);
  std::vector<long> parallel = par::map_indexed<long>(500, true, square);
  CHECK(serial == parallel);
  CHECK_THROWS_AS(par::map_indexed<int>(8, true,
                                        [](long i) -> int {
                                          if (i == 3) throw std::domain_error("boom");
                                          return 0;
                                        }),
                  std::domain_error);
}

TEST_CASE("suites produce byte-identical reports with and without threads") {
  VerifyConfig serial_cfg;
  serial_cfg.parallel = false;
  VerifyConfig parallel_cfg;
  parallel_cfg.parallel = true;

  std::vector<CheckRecord> a = suite_recurrence(serial_cfg);
  std::vector<CheckRecord> b = suite_recurrence(parallel_cfg);
  CHECK(a.size() == b.size());
  CHECK(to_json(a) == to_json(b));
  CHECK(all_pass(a));

  std::vector<CheckRecord> c = records_window_poly(serial_cfg);
  std::vector<CheckRecord> d = records_window_poly(parallel_cfg);
  CHECK(to_json(c) == to_json(d));
  CHECK(all_pass(c));
}

TEST_CASE("repeated runs serialize identically") {
  VerifyConfig cfg;
  std::string first = to_json(suite_recurrence(cfg));
  std::string second = to_json(suite_recurrence(cfg));
  CHECK(first == second);
}

TEST_CASE("records carry the full schema") {
  VerifyConfig cfg;
  std::vector<CheckRecord> rs = suite_recurrence(cfg);
  REQUIRE(!rs.empty());
  nlohmann::json parsed = nlohmann::json::parse(to_json(rs));
  REQUIRE(parsed.is_array());
  for (const char* key :
       {"id", "formula", "inputs", "lhs", "rhs", "abs_error", "bound", "pass", "engine", "K",
        "precision"})
    CHECK(parsed.at(0).contains(key));
  std::string csv = to_csv(rs);
  CHECK(csv.rfind("id,formula,inputs", 0) == 0);
  std::string text = to_text(rs);
  CHECK(text.find("checks, 0 failed") != std::string::npos);
}

TEST_CASE("unknown suite names are rejected, known ones listed") {
  VerifyConfig cfg;
  CHECK_THROWS_AS(run_suite("nope", cfg), std::domain_error);
  auto names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "lemmas") != names.end());
  CHECK(std::find(names.begin(), names.end(), "all") != names.end());
}

TEST_CASE("lemma suite passes end to end") {
  VerifyConfig cfg;
  std::vector<CheckRecord> rs = suite_lemmas(cfg);
  CHECK(rs.size() == 2 * 1325 + 2325);
  CHECK(all_pass(rs));
}
