#include "carkit/morphisms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace carkit {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

/// Columns [e | V]: an orthogonal completion of ran V by the kernel unit.
Eigen::MatrixXd kernel_completion(const Isometry& v) {
  const Vec e = kernel_selfconjugate_unit(v);
  Eigen::MatrixXd u(v.codomain_dim(), v.codomain_dim());
  u.col(0) = e.real();
  u.rightCols(v.domain_dim()) = v.matrix();
  return u;
}

/// Inverse generator relabeling of the shift: mask bit j+1 -> bit j.
/// Every mask must avoid the first generator.
AlgElement shift_down(const AlgElement& a, int target_dim) {
  AlgElement out = AlgElement::zero(target_dim);
  for (const auto& [mask, coeff] : a.terms()) {
    if (mask & 1u)
      throw std::logic_error("shift_down: unexpected first-generator term");
    out += AlgElement::monomial(target_dim, mask >> 1, coeff);
  }
  return out;
}

void require_index_minus_one(const Isometry& v, const char* who) {
  if (fredholm_index(v) != -1)
    throw std::invalid_argument(std::string(who) + ": requires ind V = -1");
}

void require_on_codomain(const Isometry& v, const AlgElement& a,
                         const char* who) {
  if (a.dim() != v.codomain_dim())
    throw std::invalid_argument(std::string(who) +
                                ": element does not live on V's codomain");
}

/// Rotated-frame split shared by decompose and sigma_left_inverse: pulls a
/// back through the completion [e | V] and separates the kernel-direction
/// generator.
struct RotatedSplit {
  Eigen::MatrixXd completion;
  AlgElement x;
  AlgElement y;
};

RotatedSplit rotated_split(const Isometry& v, const AlgElement& a) {
  Eigen::MatrixXd u = kernel_completion(v);
  const AlgElement w = rho(Isometry(u.transpose()), a);
  auto [x, y] = split_off_generator(w, 1);
  return RotatedSplit{std::move(u), std::move(x), std::move(y)};
}

}  // namespace

HomomorphismTable::HomomorphismTable(int domain_dim,
                                     std::vector<AlgElement> generator_images)
    : domain_dim_(domain_dim), generators_(std::move(generator_images)) {
  if (domain_dim_ < 1 || domain_dim_ > kMaxGenerators)
    throw std::invalid_argument("HomomorphismTable: bad domain dimension");
  if (static_cast<int>(generators_.size()) != domain_dim_)
    throw std::invalid_argument(
        "HomomorphismTable: need one image per generator");
  codomain_dim_ = generators_.front().dim();
  for (const AlgElement& g : generators_)
    if (g.dim() != codomain_dim_)
      throw std::invalid_argument(
          "HomomorphismTable: generator images on mixed spaces");
  cache_.resize(std::size_t{1} << domain_dim_);
  cache_[0] = AlgElement::unit(codomain_dim_);
}

const AlgElement& HomomorphismTable::image(Mask mask) const {
  if (mask >= cache_.size())
    throw std::invalid_argument("HomomorphismTable: mask out of range");
  std::optional<AlgElement>& slot = cache_[mask];
  if (!slot) {
    // c_S = c_{j1}...c_{jd} ascending, so peel the top generator off the
    // right.
    const int j = std::bit_width(mask);
    const Mask rest = mask ^ (Mask{1} << (j - 1));
    slot = image(rest) * generators_[j - 1];
  }
  return *slot;
}

AlgElement HomomorphismTable::apply(const AlgElement& a) const {
  if (a.dim() != domain_dim_)
    throw std::invalid_argument("HomomorphismTable: element on wrong space");
  AlgElement out = AlgElement::zero(codomain_dim_);
  for (const auto& [mask, coeff] : a.terms()) out += coeff * image(mask);
  return out;
}

HomomorphismTable rho_table(const Isometry& v) {
  const int m = v.domain_dim();
  std::vector<AlgElement> images;
  images.reserve(m);
  for (int j = 1; j <= m; ++j)
    images.push_back(
        b_of(std::numbers::sqrt2 * v.apply(basis_vector(m, j))));
  return HomomorphismTable(m, std::move(images));
}

AlgElement rho(const Isometry& v, const AlgElement& a) {
  if (a.dim() != v.domain_dim())
    throw std::invalid_argument("rho: element does not live on V's domain");
  return rho_table(v).apply(a);
}

OddUnitary k_element(const Isometry& v, KSign sign) {
  require_index_minus_one(v, "k_element");
  Vec e = kernel_selfconjugate_unit(v);
  if (sign == KSign::flipped) e = -e;
  const Vec h = Complex(0.0, std::numbers::sqrt2) * e;
  return OddUnitary{std::move(e), b_of(h)};
}

TwistUnitary u_element(const Isometry& v, KSign sign) {
  const OddUnitary k = k_element(v, sign);
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  return TwistUnitary{linear_combine(
      {{inv_sqrt2, AlgElement::unit(v.codomain_dim())},
       {inv_sqrt2, k.element}})};
}

HomomorphismTable sigma_table(const Isometry& v, KSign sign) {
  const AlgElement k = k_element(v, sign).element;
  const int m = v.domain_dim();
  std::vector<AlgElement> images;
  images.reserve(m);
  for (int j = 1; j <= m; ++j)
    images.push_back(
        k * b_of(std::numbers::sqrt2 * v.apply(basis_vector(m, j))));
  return HomomorphismTable(m, std::move(images));
}

AlgElement sigma(const Isometry& v, const AlgElement& a, KSign sign) {
  if (a.dim() != v.domain_dim())
    throw std::invalid_argument("sigma: element does not live on V's domain");
  return sigma_table(v, sign).apply(a);
}

bool image_is_even_subalgebra(const Isometry& v, double tol) {
  require_index_minus_one(v, "image_is_even_subalgebra");
  const int m = v.domain_dim();
  const int n = v.codomain_dim();
  const HomomorphismTable table = sigma_table(v);
  const std::size_t basis = std::size_t{1} << m;

  // Positions of the even masks of the codomain algebra; there are 2^m.
  std::vector<int> position(std::size_t{1} << n, -1);
  int next = 0;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask)
    if (monomial_grade(mask) == Grade::even) position[mask] = next++;

  Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(next, basis);
  for (Mask s = 0; s < basis; ++s) {
    for (const auto& [mask, coeff] : table.image(s).terms()) {
      if (monomial_grade(mask) == Grade::odd) {
        if (std::abs(coeff) > tol) return false;
        continue;
      }
      coeffs(position[mask], s) = coeff;
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(coeffs);
  qr.setThreshold(1e-8);
  return qr.rank() == static_cast<Eigen::Index>(basis);
}

Decomposition decompose(const Isometry& v, const AlgElement& a) {
  require_index_minus_one(v, "decompose");
  require_on_codomain(v, a, "decompose");
  RotatedSplit split = rotated_split(v, a);
  const HomomorphismTable back = rho_table(Isometry(split.completion));
  const AlgElement c1 = AlgElement::generator(v.codomain_dim(), 1);
  return Decomposition{
      back.apply(grade_project(split.x, Grade::even)),
      back.apply(kMinusI * grade_project(split.y, Grade::odd)),
      back.apply(grade_project(split.x, Grade::odd) +
                 c1 * grade_project(split.y, Grade::even))};
}

AlgElement sigma_left_inverse(const Isometry& v, const AlgElement& a) {
  require_index_minus_one(v, "sigma_left_inverse");
  require_on_codomain(v, a, "sigma_left_inverse");
  const RotatedSplit split = rotated_split(v, a);
  // rho_V^{-1}(a0 + a1) in rotated coordinates is x_even - i*y_odd,
  // relabeled down past the kernel generator.
  return shift_down(grade_project(split.x, Grade::even) +
                        kMinusI * grade_project(split.y, Grade::odd),
                    v.domain_dim());
}

AlgElement rho_left_inverse(const Isometry& v, const AlgElement& a) {
  require_index_minus_one(v, "rho_left_inverse");
  require_on_codomain(v, a, "rho_left_inverse");
  const AlgElement u = u_element(v).element;
  return sigma_left_inverse(v, u * a * adjoint(u));
}

AlgElement cond_expect(const Isometry& v, const AlgElement& a) {
  return sigma(v, sigma_left_inverse(v, a));
}

double image_dimension_ratio(const Isometry& v) {
  return std::ldexp(1.0, v.codomain_dim() - v.domain_dim());
}

double stat_dimension(const Isometry& v) {
  return std::sqrt(image_dimension_ratio(v));
}

Isometry transport_unitary(const Isometry& v, const Isometry& v_prime) {
  require_index_minus_one(v, "transport_unitary");
  require_index_minus_one(v_prime, "transport_unitary");
  if (v.domain_dim() != v_prime.domain_dim() ||
      v.codomain_dim() != v_prime.codomain_dim())
    throw std::invalid_argument("transport_unitary: shape mismatch");
  const Eigen::MatrixXd e = kernel_selfconjugate_unit(v).real();
  const Eigen::MatrixXd e_prime = kernel_selfconjugate_unit(v_prime).real();
  return Isometry(v_prime.matrix() * v.matrix().transpose() +
                  e_prime * e.transpose());
}

double intertwiner_identity_error(const Isometry& w, const Isometry& v) {
  require_index_minus_one(v, "intertwiner_identity_error");
  if (v.codomain_dim() != w.domain_dim())
    throw std::invalid_argument(
        "intertwiner_identity_error: codomain of V must match domain of W");
  const Isometry wv = compose(w, v);
  const HomomorphismTable w_table = rho_table(w);
  const HomomorphismTable wv_table = rho_table(wv);
  const HomomorphismTable v_sigma = sigma_table(v);
  const AlgElement t = w_table.apply(u_element(v).element);
  const AlgElement t_star = adjoint(t);
  double worst = max_coeff_distance(t * t_star,
                                    AlgElement::unit(w.codomain_dim()));
  for (int j = 1; j <= v.domain_dim(); ++j) {
    const Mask mask = Mask{1} << (j - 1);
    const AlgElement lhs = w_table.apply(v_sigma.image(mask));
    const AlgElement rhs = t * wv_table.image(mask) * t_star;
    worst = std::max(worst, max_coeff_distance(lhs, rhs));
  }
  return worst;
}

bool intertwiner_identity_check(const Isometry& w, const Isometry& v,
                                double tol) {
  return intertwiner_identity_error(w, v) <= tol;
}

}  // namespace carkit
