#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carkit/suites.hpp"

namespace {

bool write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return true;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "car-verify: cannot open '" << out_path << "' for writing\n";
    return false;
  }
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
  return static_cast<bool>(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Seeded verification harness for the selfdual CAR algebra and its "
      "even-subalgebra isomorphisms"};
  app.require_subcommand(1);

  int dim_in = 4;
  int trials = 100;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::string format = "json";
  std::vector<std::string> suite_names;
  std::string out_path;

  CLI::App* run = app.add_subcommand("run", "Run verification suites");
  run->add_option("--dim-in", dim_in,
                  "Ceiling for the domain-dimension sweep (default 4)");
  run->add_option("--trials", trials, "Trials per check (default 100)");
  run->add_option("--seed", seed, "Master seed (default 42)");
  run->add_option("--tol", tol,
                  "Tolerance for derived identities (default 1e-10)");
  run->add_option("--format", format, "Report format (default json)")
      ->check(CLI::IsMember({"json", "text"}));
  run->add_option("--suite", suite_names,
                  "Comma-separated subset of "
                  "proposition,remark1,remark2,remark3,remark4,oracle")
      ->delimiter(',');
  run->add_option("--out", out_path, "Write the report to FILE");

  int bench_dim = 8;
  double bench_density = 0.1;
  int bench_reps = 100;
  std::uint64_t bench_seed = 42;
  std::string bench_out;

  CLI::App* bench =
      app.add_subcommand("bench", "Benchmark the multiplication kernel");
  bench->add_option("--dim", bench_dim, "Generator count")->required();
  bench->add_option("--density", bench_density,
                    "Fraction of the 2^dim monomials present")
      ->required();
  bench->add_option("--reps", bench_reps, "Number of timed products")
      ->required();
  bench->add_option("--seed", bench_seed, "Master seed")->required();
  bench->add_option("--out", bench_out, "Write the report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run) {
      carkit::SuiteConfig cfg;
      cfg.dim_in = dim_in;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.tol = tol;
      cfg.format = format == "text" ? carkit::ReportFormat::text
                                    : carkit::ReportFormat::json;
      for (const std::string& name : suite_names) {
        const auto id = carkit::suite_from_name(name);
        if (!id) {
          std::cerr << "car-verify: unknown suite '" << name << "'\n";
          return 2;
        }
        cfg.suites.push_back(*id);
      }

      carkit::Report report;
      try {
        report = carkit::run_suite(cfg);
      } catch (const std::invalid_argument& e) {
        std::cerr << "car-verify: " << e.what() << "\n";
        return 2;
      }
      if (!write_output(carkit::emit_report(report, cfg.format), out_path))
        return 2;
      return carkit::all_passed(report) ? 0 : 1;
    }

    carkit::Report report;
    try {
      report = carkit::bench_multiply(bench_dim, bench_density, bench_reps,
                                      bench_seed);
    } catch (const std::invalid_argument& e) {
      std::cerr << "car-verify: " << e.what() << "\n";
      return 2;
    }
    if (!write_output(carkit::emit_report(report, carkit::ReportFormat::json),
                      bench_out))
      return 2;
    return carkit::all_passed(report) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "car-verify: internal failure: " << e.what() << "\n";
    return 1;
  }
}
