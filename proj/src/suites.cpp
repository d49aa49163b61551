#include "carkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "carkit/algebra.hpp"
#include "carkit/morphisms.hpp"
#include "carkit/repr.hpp"
#include "carkit/rng.hpp"
#include "carkit/space.hpp"

namespace carkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

/// Seed schedule: base = mix_seed(seed, suite<<32 | m), one per record;
/// trial seeds and per-trial draws are further mix_seed splits, so trials
/// are independent and reorderable.
std::uint64_t base_seed(std::uint64_t seed, SuiteId id, int m) {
  const std::uint64_t salt =
      (static_cast<std::uint64_t>(id) << 32) | static_cast<std::uint32_t>(m);
  return mix_seed(seed, salt);
}

class CheckBuilder {
 public:
  CheckBuilder(std::string name, int dim, std::uint64_t seed)
      : record_{std::move(name), dim, seed, true, 0.0, 0.0},
        start_(Clock::now()) {}

  void observe(double err, double tol) {
    record_.max_error = std::max(record_.max_error, err);
    if (!(err <= tol)) record_.passed = false;  // NaN fails
  }

  void require(bool ok) {
    if (!ok) record_.passed = false;
  }

  CheckRecord finish() {
    record_.elapsed_ms = ms_since(start_);
    return record_;
  }

 private:
  CheckRecord record_;
  Clock::time_point start_;
};

Isometry trial_isometry(int m, int t, std::uint64_t seed) {
  return t == 0 ? shift_isometry(m) : random_isometry(m, m + 1, seed);
}

void run_proposition(const SuiteConfig& cfg, Report& out) {
  const int m_max = std::min(cfg.dim_in, 8);
  for (int m = 1; m <= m_max; ++m) {
    const std::uint64_t base = base_seed(cfg.seed, SuiteId::proposition, m);
    CheckBuilder hom("proposition/homomorphism", m, base);
    CheckBuilder twist("proposition/twist_unitary", m, base);
    CheckBuilder conj("proposition/twist_conjugation", m, base);
    CheckBuilder rank("proposition/even_image_rank", m, base);
    std::optional<CheckBuilder> oracle;
    if (m <= 6) oracle.emplace("proposition/matrix_oracle", m, base);

    const AlgElement unit_in = AlgElement::unit(m);
    const AlgElement unit_out = AlgElement::unit(m + 1);
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t ts = mix_seed(base, t);
      const Isometry v = trial_isometry(m, t, mix_seed(ts, 0));
      const HomomorphismTable table = sigma_table(v);
      const AlgElement a = random_element(m, m, mix_seed(ts, 1));
      const AlgElement b = random_element(m, m, mix_seed(ts, 2));
      const AlgElement sa = table.apply(a);
      const AlgElement sb = table.apply(b);

      hom.observe(max_coeff_distance(sa * sb, table.apply(a * b)), cfg.tol);
      hom.observe(max_coeff_distance(adjoint(sa), table.apply(adjoint(a))),
                  cfg.tol);
      hom.observe(max_coeff_distance(table.apply(unit_in), unit_out),
                  cfg.tol);

      const AlgElement u = u_element(v).element;
      const AlgElement k = k_element(v).element;
      twist.observe(max_coeff_distance(u * adjoint(u), unit_out),
                    kStructuralTol);
      twist.observe(max_coeff_distance(adjoint(u) * u, unit_out),
                    kStructuralTol);
      twist.observe(max_coeff_distance(u * u, k), kStructuralTol);

      conj.observe(max_coeff_distance(sa, u * rho(v, a) * adjoint(u)),
                   cfg.tol);

      rank.require(image_is_even_subalgebra(v));

      if (oracle) {
        const Eigen::MatrixXcd tu = represent(u);
        oracle->observe(
            max_entry_distance(represent(sa),
                               tu * represent(rho(v, a)) * tu.adjoint()),
            cfg.tol);
      }
    }
    out.checks.push_back(hom.finish());
    out.checks.push_back(twist.finish());
    out.checks.push_back(conj.finish());
    out.checks.push_back(rank.finish());
    if (oracle) out.checks.push_back(oracle->finish());
  }
}

void run_remark1(const SuiteConfig& cfg, Report& out) {
  const int m_max = std::min(cfg.dim_in, 6);
  const int pairs = std::max(1, cfg.trials / 10);
  for (int m = 2; m <= m_max; ++m) {
    const std::uint64_t base = base_seed(cfg.seed, SuiteId::remark1, m);
    CheckBuilder orth("remark1/transport_orthogonal", m, base);
    CheckBuilder cov("remark1/transport_covariance", m, base);
    CheckBuilder sign("remark1/sign_covariance", m, base);

    const Eigen::MatrixXd identity =
        Eigen::MatrixXd::Identity(m + 1, m + 1);
    for (int t = 0; t < pairs; ++t) {
      const std::uint64_t ts = mix_seed(base, t);
      const Isometry v = random_isometry(m, m + 1, mix_seed(ts, 0));
      const Isometry v_prime = trial_isometry(m, t, mix_seed(ts, 1));
      const Isometry u = transport_unitary(v, v_prime);
      orth.observe((u.matrix().transpose() * u.matrix() - identity)
                       .cwiseAbs()
                       .maxCoeff(),
                   kStructuralTol);

      const HomomorphismTable sv = sigma_table(v);
      const HomomorphismTable sv_prime = sigma_table(v_prime);
      const HomomorphismTable sv_flip = sigma_table(v, KSign::flipped);
      const HomomorphismTable ru = rho_table(u);
      for (int j = 1; j <= m; ++j) {
        const Mask mask = Mask{1} << (j - 1);
        cov.observe(
            max_coeff_distance(ru.apply(sv.image(mask)),
                               sv_prime.image(mask)),
            cfg.tol);
        // flipping the kernel sign composes sigma with the grading
        sign.observe(max_coeff_distance(sv_flip.image(mask),
                                        sv.apply(gamma(
                                            AlgElement::generator(m, j)))),
                     kStructuralTol);
      }
    }
    out.checks.push_back(orth.finish());
    out.checks.push_back(cov.finish());
    out.checks.push_back(sign.finish());
  }
}

void run_remark2(const SuiteConfig& cfg, Report& out) {
  const int m_max = std::min(cfg.dim_in, 6);
  for (int m = 2; m <= m_max; m += 2) {
    const std::uint64_t base = base_seed(cfg.seed, SuiteId::remark2, m);
    CheckBuilder car("remark2/car_anticommutators", m, base);
    CheckBuilder vac("remark2/vacuum_annihilation", m, base);

    const std::vector<Vec> h_basis = polarization_basis(m);
    const Eigen::VectorXcd omega = vacuum(m);
    const AlgElement zero = AlgElement::zero(m);
    const AlgElement unit = AlgElement::unit(m);

    const auto random_h_vector = [&](std::uint64_t seed) {
      SplitMix64 rng(seed);
      Vec f = Vec::Zero(m);
      for (const Vec& fa : h_basis) f += rng.complex_in_box() * fa;
      return f;
    };

    for (const Vec& fa : h_basis)
      vac.observe((represent(car_annihilator(fa)) * omega).norm(),
                  kStructuralTol);

    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t ts = mix_seed(base, t);
      const Vec f = random_h_vector(mix_seed(ts, 0));
      const Vec g = random_h_vector(mix_seed(ts, 1));
      const AlgElement af = car_annihilator(f);
      const AlgElement ag = car_annihilator(g);
      const AlgElement ag_star = adjoint(ag);
      car.observe(max_coeff_distance(af * ag + ag * af, zero),
                  kStructuralTol);
      car.observe(max_coeff_distance(af * ag_star + ag_star * af,
                                     inner(g, f) * unit),
                  kStructuralTol);
      vac.observe((represent(af) * omega).norm(), kStructuralTol);
    }
    out.checks.push_back(car.finish());
    out.checks.push_back(vac.finish());
  }
}

void run_remark3(const SuiteConfig& cfg, Report& out) {
  const int m_max = std::min(cfg.dim_in, 6);
  for (int m = 1; m <= m_max; ++m) {
    const std::uint64_t base = base_seed(cfg.seed, SuiteId::remark3, m);
    CheckBuilder sli("remark3/sigma_left_inverse", m, base);
    CheckBuilder rli("remark3/rho_left_inverse", m, base);
    CheckBuilder rea("remark3/decompose_reassembly", m, base);
    CheckBuilder uni("remark3/decompose_uniqueness", m, base);
    CheckBuilder ce("remark3/conditional_expectation", m, base);

    const AlgElement zero_out = AlgElement::zero(m + 1);
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t ts = mix_seed(base, t);
      const Isometry v = trial_isometry(m, t, mix_seed(ts, 0));
      const AlgElement k = k_element(v).element;

      const AlgElement a = random_element(m, m, mix_seed(ts, 1));
      sli.observe(max_coeff_distance(sigma_left_inverse(v, sigma(v, a)), a),
                  cfg.tol);
      rli.observe(max_coeff_distance(rho_left_inverse(v, rho(v, a)), a),
                  cfg.tol);

      const AlgElement c = random_element(m + 1, m + 1, mix_seed(ts, 2));
      const Decomposition parts = decompose(v, c);
      rea.observe(
          max_coeff_distance(parts.a0 + k * parts.a1 + parts.b1, c),
          kStructuralTol);
      rea.observe(max_coeff_distance(grade_project(parts.a0, Grade::odd),
                                     zero_out),
                  kStructuralTol);
      rea.observe(max_coeff_distance(grade_project(parts.a1, Grade::even),
                                     zero_out),
                  kStructuralTol);
      rea.observe(max_coeff_distance(grade_project(parts.b1, Grade::even),
                                     zero_out),
                  kStructuralTol);

      const AlgElement a0 = rho(
          v, grade_project(random_element(m, m, mix_seed(ts, 3)),
                           Grade::even));
      const AlgElement a1 = rho(
          v,
          grade_project(random_element(m, m, mix_seed(ts, 4)), Grade::odd));
      const AlgElement b1 = grade_project(
          random_element(m + 1, m + 1, mix_seed(ts, 5)), Grade::odd);
      const Decomposition unique = decompose(v, a0 + k * a1 + b1);
      uni.observe(max_coeff_distance(unique.a0, a0), cfg.tol);
      uni.observe(max_coeff_distance(unique.a1, a1), cfg.tol);
      uni.observe(max_coeff_distance(unique.b1, b1), cfg.tol);
    }

    // conditional expectation as a linear map: checked on every basis
    // monomial of the codomain against the grading mean
    for (int t = 0; t < std::min(cfg.trials, 8); ++t) {
      const Isometry v =
          trial_isometry(m, t, mix_seed(mix_seed(base, 1000003), t));
      for (Mask s = 0; s < (Mask{1} << (m + 1)); ++s) {
        const AlgElement cs = AlgElement::monomial(m + 1, s);
        ce.observe(max_coeff_distance(cond_expect(v, cs),
                                      0.5 * (cs + gamma(cs))),
                   kStructuralTol);
      }
    }

    out.checks.push_back(sli.finish());
    out.checks.push_back(rli.finish());
    out.checks.push_back(rea.finish());
    out.checks.push_back(uni.finish());
    out.checks.push_back(ce.finish());
  }
}

void run_remark4(const SuiteConfig& cfg, Report& out) {
  const int m_max = std::min(cfg.dim_in, 10);
  const int pairs = std::max(1, cfg.trials / 50);
  for (int m = 1; m <= m_max; ++m) {
    const std::uint64_t base = base_seed(cfg.seed, SuiteId::remark4, m);
    CheckBuilder sym("remark4/intertwiner_symbolic", m, base);
    CheckBuilder mat("remark4/intertwiner_matrix", m, base);
    CheckBuilder idx("remark4/index_bookkeeping", m, base);

    for (int n_w = m + 1; n_w <= 12; ++n_w) {
      for (int t = 0; t < pairs; ++t) {
        const std::uint64_t ts =
            mix_seed(base, (static_cast<std::uint64_t>(n_w) << 16) |
                               static_cast<std::uint32_t>(t));
        const Isometry v = trial_isometry(m, t, mix_seed(ts, 0));
        const Isometry w = random_isometry(m + 1, n_w, mix_seed(ts, 1));
        sym.observe(intertwiner_identity_error(w, v), cfg.tol);
        mat.observe(intertwiner_identity_matrix_error(w, v),
                    kOperatorNormTol);
        idx.require(fredholm_index(compose(w, v)) ==
                    fredholm_index(w) - 1);
      }
    }
    out.checks.push_back(sym.finish());
    out.checks.push_back(mat.finish());
    out.checks.push_back(idx.finish());
  }
}

void run_oracle(const SuiteConfig& cfg, Report& out) {
  const int m_max = std::min(cfg.dim_in, 8);
  for (int m = 2; m <= m_max; ++m) {
    const std::uint64_t base = base_seed(cfg.seed, SuiteId::oracle, m);
    CheckBuilder prod("oracle/product", m, base);
    CheckBuilder adj("oracle/adjoint", m, base);
    CheckBuilder tra("oracle/trace", m, base);

    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t ts = mix_seed(base, t);
      const AlgElement a = random_element(m, m, mix_seed(ts, 0));
      const AlgElement b = random_element(m, m, mix_seed(ts, 1));
      const Eigen::MatrixXcd ma = represent(a);
      const Eigen::MatrixXcd mb = represent(b);
      prod.observe(max_entry_distance(ma * mb, represent(a * b)), cfg.tol);
      adj.observe(max_entry_distance(ma.adjoint(), represent(adjoint(a))),
                  cfg.tol);
      tra.observe(std::abs(trace(a) - ma.trace() / double(ma.rows())),
                  cfg.tol);
    }
    out.checks.push_back(prod.finish());
    out.checks.push_back(adj.finish());
    out.checks.push_back(tra.finish());

    if (m <= 6) {
      CheckBuilder norm("oracle/norm_isometry", m, base);
      const int elements = std::max(1, cfg.trials / 10);
      for (int t = 0; t < elements; ++t) {
        const std::uint64_t ts = mix_seed(mix_seed(base, 999331), t);
        const Isometry v = trial_isometry(m, t, mix_seed(ts, 0));
        const AlgElement a = random_element(m, m, mix_seed(ts, 1));
        norm.observe(
            std::abs(operator_norm(sigma(v, a)) - operator_norm(a)),
            kOperatorNormTol);
      }
      out.checks.push_back(norm.finish());
    }
  }
}

std::vector<SuiteId> resolve_suites(const SuiteConfig& cfg) {
  if (cfg.suites.empty()) return all_suites();
  std::vector<SuiteId> picked;
  for (SuiteId id : all_suites())
    if (std::find(cfg.suites.begin(), cfg.suites.end(), id) !=
            cfg.suites.end() &&
        std::find(picked.begin(), picked.end(), id) == picked.end())
      picked.push_back(id);
  return picked;
}

void validate(const SuiteConfig& cfg, const std::vector<SuiteId>& picked) {
  if (cfg.dim_in < 1) throw std::invalid_argument("dim_in must be >= 1");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(cfg.tol >= 0.0)) throw std::invalid_argument("tol must be >= 0");
  for (SuiteId id : picked) {
    const bool uses_matrices =
        id == SuiteId::proposition || id == SuiteId::remark2 ||
        id == SuiteId::remark4 || id == SuiteId::oracle;
    if (uses_matrices && cfg.dim_in > 12)
      throw std::invalid_argument(
          "dim_in must be <= 12 for suites using the matrix backend");
  }
}

}  // namespace

const std::vector<SuiteId>& all_suites() {
  static const std::vector<SuiteId> ids = {
      SuiteId::proposition, SuiteId::remark1, SuiteId::remark2,
      SuiteId::remark3,     SuiteId::remark4, SuiteId::oracle};
  return ids;
}

std::string_view suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::proposition:
      return "proposition";
    case SuiteId::remark1:
      return "remark1";
    case SuiteId::remark2:
      return "remark2";
    case SuiteId::remark3:
      return "remark3";
    case SuiteId::remark4:
      return "remark4";
    case SuiteId::oracle:
      return "oracle";
  }
  throw std::invalid_argument("suite_name: unknown suite");
}

std::optional<SuiteId> suite_from_name(std::string_view name) {
  for (SuiteId id : all_suites())
    if (suite_name(id) == name) return id;
  return std::nullopt;
}

Report run_suite(const SuiteConfig& cfg) {
  const std::vector<SuiteId> picked = resolve_suites(cfg);
  validate(cfg, picked);
  Report report;
  for (SuiteId id : picked) {
    switch (id) {
      case SuiteId::proposition:
        run_proposition(cfg, report);
        break;
      case SuiteId::remark1:
        run_remark1(cfg, report);
        break;
      case SuiteId::remark2:
        run_remark2(cfg, report);
        break;
      case SuiteId::remark3:
        run_remark3(cfg, report);
        break;
      case SuiteId::remark4:
        run_remark4(cfg, report);
        break;
      case SuiteId::oracle:
        run_oracle(cfg, report);
        break;
    }
  }
  return report;
}

Report bench_multiply(int dim, double density, int reps,
                      std::uint64_t seed) {
  if (dim < 1 || dim > kMaxGenerators)
    throw std::invalid_argument("bench_multiply: dim out of range");
  if (!(density > 0.0 && density <= 1.0))
    throw std::invalid_argument("bench_multiply: density must be in (0, 1]");
  if (reps < 1) throw std::invalid_argument("bench_multiply: reps must be >= 1");

  const auto sparse_element = [](int d, double dens, std::uint64_t s) {
    SplitMix64 rng(s);
    const Mask total = Mask{1} << d;
    const int terms = std::max(
        1, static_cast<int>(std::lround(dens * static_cast<double>(total))));
    std::set<Mask> masks;
    while (static_cast<int>(masks.size()) < terms)
      masks.insert(static_cast<Mask>(rng.next()) & (total - 1));
    AlgElement out = AlgElement::zero(d);
    for (Mask mask : masks)
      out += AlgElement::monomial(d, mask, rng.complex_in_box());
    return out;
  };

  Report report;
  const AlgElement a = sparse_element(dim, density, mix_seed(seed, 0));
  const AlgElement b = sparse_element(dim, density, mix_seed(seed, 1));

  std::vector<double> times(reps);
  std::size_t sink = 0;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    const AlgElement c = a * b;
    times[r] = ms_since(start);
    sink += c.term_count();
  }
  std::nth_element(times.begin(), times.begin() + reps / 2, times.end());
  CheckRecord timing{"bench/multiply", dim, seed, sink != SIZE_MAX, 0.0,
                     times[reps / 2]};
  report.checks.push_back(timing);

  const int check_dim = std::min(dim, 8);
  const auto start = Clock::now();
  const AlgElement x = sparse_element(check_dim, density, mix_seed(seed, 2));
  const AlgElement y = sparse_element(check_dim, density, mix_seed(seed, 3));
  const double err = max_entry_distance(represent(x) * represent(y),
                                        represent(x * y));
  report.checks.push_back(CheckRecord{"bench/spot_check", check_dim, seed,
                                      err <= kDerivedTol, err,
                                      ms_since(start)});
  return report;
}

std::string emit_report(const Report& r, ReportFormat format) {
  int passed = 0;
  for (const CheckRecord& rec : r.checks) passed += rec.passed ? 1 : 0;
  const int total = static_cast<int>(r.checks.size());

  if (format == ReportFormat::json) {
    nlohmann::ordered_json doc;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& rec : r.checks) {
      nlohmann::ordered_json item;
      item["name"] = rec.name;
      item["dim"] = rec.dim;
      item["seed"] = rec.seed;
      item["passed"] = rec.passed;
      item["max_error"] = rec.max_error;
      item["elapsed_ms"] = rec.elapsed_ms;
      doc["checks"].push_back(std::move(item));
    }
    doc["summary"] = {{"total", total},
                      {"passed", passed},
                      {"failed", total - passed}};
    return doc.dump();
  }

  std::string out;
  char line[256];
  for (const CheckRecord& rec : r.checks) {
    std::snprintf(line, sizeof(line),
                  "%s %-35s dim=%-2d seed=%llu max_error=%.3e "
                  "elapsed_ms=%.2f\n",
                  rec.passed ? "PASS" : "FAIL", rec.name.c_str(), rec.dim,
                  static_cast<unsigned long long>(rec.seed), rec.max_error,
                  rec.elapsed_ms);
    out += line;
  }
  std::snprintf(line, sizeof(line), "summary: total=%d passed=%d failed=%d\n",
                total, passed, total - passed);
  out += line;
  return out;
}

bool all_passed(const Report& r) {
  return std::all_of(r.checks.begin(), r.checks.end(),
                     [](const CheckRecord& rec) { return rec.passed; });
}

}  // namespace carkit
