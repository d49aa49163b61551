#pragma once

// Verification suites behind the car-verify CLI: seeded property checks for
// the even-subalgebra isomorphism family, aggregated into deterministic
// reports. Identical configs give byte-identical JSON except elapsed_ms.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace carkit {

enum class SuiteId : int {
  proposition = 0,
  remark1 = 1,
  remark2 = 2,
  remark3 = 3,
  remark4 = 4,
  oracle = 5,
};

enum class ReportFormat { json, text };

/// Tolerance for matrix-backed operator-norm comparisons.
inline constexpr double kOperatorNormTol = 1e-9;

/// dim_in is the sweep ceiling; each suite clamps it to its own range.
/// Suites that use the matrix backend require dim_in <= 12.
struct SuiteConfig {
  int dim_in = 4;
  int trials = 100;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  ReportFormat format = ReportFormat::json;
  std::vector<SuiteId> suites;  // empty selects all, in canonical order
};

struct CheckRecord {
  std::string name;  // "<suite>/<check>"
  int dim = 0;
  std::uint64_t seed = 0;  // per-(suite, dim) base seed
  bool passed = false;
  double max_error = 0.0;
  double elapsed_ms = 0.0;  // wall span; excluded from determinism
};

struct Report {
  std::vector<CheckRecord> checks;
};

const std::vector<SuiteId>& all_suites();
std::string_view suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(std::string_view name);

/// Runs the selected suites. Throws std::invalid_argument on a bad config.
Report run_suite(const SuiteConfig& cfg);

/// Times the multiplication kernel on seeded sparse elements (median wall
/// time per product in elapsed_ms) and spot-checks the product against the
/// matrix backend at min(dim, 8).
Report bench_multiply(int dim, double density, int reps, std::uint64_t seed);

/// json: single document, stable key order. text: one PASS/FAIL line per
/// check plus a trailing summary line.
std::string emit_report(const Report& r, ReportFormat format);

bool all_passed(const Report& r);

}  // namespace carkit
