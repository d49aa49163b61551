#include <doctest.h>

#include <regex>
#include <stdexcept>
#include <string>

#include "carkit/suites.hpp"

using namespace carkit;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.dim_in = 2;
  cfg.trials = 3;
  return cfg;
}

std::string strip_elapsed(std::string text) {
  static const std::regex elapsed(R"("elapsed_ms":[^,}]+)");
  return std::regex_replace(text, elapsed, R"("elapsed_ms":0)");
}

}  // namespace

TEST_SUITE("suites") {

TEST_CASE("suite names round-trip") {
  for (SuiteId id : all_suites()) {
    const auto back = suite_from_name(suite_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!suite_from_name("nonsense").has_value());
  CHECK(all_suites().size() == 6);
}

TEST_CASE("small run passes everywhere") {
  const Report report = run_suite(small_config());
  CHECK(!report.checks.empty());
  CHECK(all_passed(report));
  for (const CheckRecord& rec : report.checks) {
    CHECK(rec.passed);
    CHECK(rec.max_error >= 0.0);
    CHECK(rec.name.find('/') != std::string::npos);
  }
}

TEST_CASE("suite selection restricts and orders the checks") {
  SuiteConfig cfg = small_config();
  cfg.suites = {SuiteId::oracle, SuiteId::remark2, SuiteId::oracle};
  const Report report = run_suite(cfg);
  REQUIRE(!report.checks.empty());
  // canonical order: remark2 before oracle, duplicates collapsed
  bool seen_oracle = false;
  for (const CheckRecord& rec : report.checks) {
    const bool is_oracle = rec.name.rfind("oracle/", 0) == 0;
    const bool is_remark2 = rec.name.rfind("remark2/", 0) == 0;
    CHECK((is_oracle || is_remark2));
    if (is_oracle) seen_oracle = true;
    if (is_remark2) CHECK(!seen_oracle);
  }
}

TEST_CASE("the m=1 even-image check is part of the proposition suite") {
  SuiteConfig cfg;
  cfg.dim_in = 1;
  cfg.trials = 2;
  cfg.suites = {SuiteId::proposition};
  const Report report = run_suite(cfg);
  bool found = false;
  for (const CheckRecord& rec : report.checks) {
    if (rec.name == "proposition/even_image_rank" && rec.dim == 1) {
      found = true;
      CHECK(rec.passed);
      CHECK(rec.max_error <= 1e-12);
    }
  }
  CHECK(found);
}

TEST_CASE("zero tolerance reports failures with positive max_error") {
  SuiteConfig cfg = small_config();
  cfg.tol = 0.0;
  cfg.suites = {SuiteId::proposition};
  const Report report = run_suite(cfg);
  CHECK(!all_passed(report));
  bool found = false;
  for (const CheckRecord& rec : report.checks)
    if (!rec.passed && rec.max_error > 0.0) found = true;
  CHECK(found);
}

TEST_CASE("invalid configs are rejected") {
  SuiteConfig cfg;
  cfg.dim_in = 0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg = SuiteConfig{};
  cfg.trials = 0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg = SuiteConfig{};
  cfg.tol = -1.0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg = SuiteConfig{};
  cfg.dim_in = 13;
  cfg.suites = {SuiteId::oracle};
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  // a symbolic-only suite may sweep higher
  cfg.suites = {SuiteId::remark3};
  CHECK_NOTHROW(run_suite(cfg));
}

TEST_CASE("reports are deterministic modulo elapsed time") {
  SuiteConfig cfg = small_config();
  const std::string first = emit_report(run_suite(cfg), ReportFormat::json);
  const std::string second = emit_report(run_suite(cfg), ReportFormat::json);
  CHECK(strip_elapsed(first) == strip_elapsed(second));
  cfg.seed = 43;
  const std::string other = emit_report(run_suite(cfg), ReportFormat::json);
  CHECK(strip_elapsed(first) != strip_elapsed(other));
}

TEST_CASE("json report shape is pinned") {
  CHECK(emit_report(Report{}, ReportFormat::json) ==
        R"({"checks":[],"summary":{"total":0,"passed":0,"failed":0}})");
  Report one;
  one.checks.push_back(CheckRecord{"demo/check", 2, 7, true, 0.0, 1.5});
  const std::string doc = emit_report(one, ReportFormat::json);
  CHECK(doc.find(R"("name":"demo/check")") != std::string::npos);
  CHECK(doc.find(R"("dim":2)") != std::string::npos);
  CHECK(doc.find(R"("seed":7)") != std::string::npos);
  CHECK(doc.find(R"("passed":true)") != std::string::npos);
  CHECK(doc.find(R"("summary":{"total":1,"passed":1,"failed":0})") !=
        std::string::npos);
}

TEST_CASE("text report has one verdict token per check") {
  Report report;
  report.checks.push_back(CheckRecord{"demo/pass", 2, 7, true, 1e-15, 0.1});
  report.checks.push_back(CheckRecord{"demo/fail", 3, 8, false, 0.5, 0.2});
  const std::string text = emit_report(report, ReportFormat::text);
  CHECK(text.find("PASS demo/pass") != std::string::npos);
  CHECK(text.find("FAIL demo/fail") != std::string::npos);
  CHECK(text.find("summary: total=2 passed=1 failed=1") !=
        std::string::npos);
}

TEST_CASE("bench runs deterministically and spot-checks the kernel") {
  const Report tiny = bench_multiply(1, 1.0, 1, 7);
  REQUIRE(tiny.checks.size() == 2);
  CHECK(all_passed(tiny));
  CHECK(tiny.checks[1].name == "bench/spot_check");
  const Report again = bench_multiply(1, 1.0, 1, 7);
  CHECK(tiny.checks[1].max_error == again.checks[1].max_error);
  const Report big = bench_multiply(10, 0.25, 5, 42);
  CHECK(all_passed(big));
  CHECK(big.checks[1].dim == 8);  // spot check clamps to the oracle range
  CHECK_THROWS_AS(bench_multiply(0, 0.5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(bench_multiply(17, 0.5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(bench_multiply(4, 0.0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(bench_multiply(4, 1.5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(bench_multiply(4, 0.5, 0, 1), std::invalid_argument);
}

}  // TEST_SUITE
