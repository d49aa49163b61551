#include "carkit/repr.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "carkit/morphisms.hpp"

namespace carkit {

namespace {

/// Applies π(c_j) to the basis ket with index s, updating (s, phase) in
/// place. Qubit a = ⌈j/2⌉ lives on bit a-1; the Z string covers the bits
/// below it.
void apply_generator(int j, std::uint32_t& s, Complex& phase) {
  const int bit = (j - 1) / 2;
  const std::uint32_t z_mask = (std::uint32_t{1} << bit) - 1;
  if (std::popcount(s & z_mask) & 1) phase = -phase;
  if (j % 2 == 0) {
    // Y: |0> -> i|1>, |1> -> -i|0>
    phase *= ((s >> bit) & 1) ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
  }
  s ^= std::uint32_t{1} << bit;
}

}  // namespace

int qubit_count(int m) {
  if (m < 1) throw std::invalid_argument("qubit_count: m must be >= 1");
  return (m + 1) / 2;
}

Eigen::MatrixXcd represent(const AlgElement& a) {
  const int n = qubit_count(a.dim());
  const std::uint32_t size = std::uint32_t{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
  for (const auto& [mask, coeff] : a.terms()) {
    for (std::uint32_t col = 0; col < size; ++col) {
      std::uint32_t row = col;
      Complex phase = coeff;
      // c_S = c_{j1}···c_{jd} with ascending indices: the highest index
      // acts on the ket first.
      std::uint32_t rest = mask;
      while (rest) {
        const int j = std::bit_width(rest);  // highest set bit, 1-based
        rest ^= std::uint32_t{1} << (j - 1);
        apply_generator(j, row, phase);
      }
      out(row, col) += phase;
    }
  }
  return out;
}

Eigen::MatrixXcd jw_generator(int j, int m) {
  if (j < 1 || j > m)
    throw std::invalid_argument("jw_generator: index out of range");
  return represent(AlgElement::generator(m, j));
}

double operator_norm(const AlgElement& a) {
  return represent(a).jacobiSvd().singularValues()(0);
}

Eigen::VectorXcd vacuum(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("vacuum: m must be even and >= 2");
  const std::uint32_t size = std::uint32_t{1} << qubit_count(m);
  Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(size);
  omega(0) = 1.0;
  for (const Vec& f : polarization_basis(m)) {
    const double residual = (represent(car_annihilator(f)) * omega).norm();
    if (residual > kStructuralTol)
      throw std::logic_error("vacuum: annihilation check failed");
  }
  return omega;
}

double max_entry_distance(const Eigen::MatrixXcd& a,
                          const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_entry_distance: shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

double intertwiner_identity_matrix_error(const Isometry& w,
                                         const Isometry& v) {
  if (fredholm_index(v) != -1)
    throw std::invalid_argument(
        "intertwiner_identity_matrix_error: requires ind V = -1");
  if (v.codomain_dim() != w.domain_dim())
    throw std::invalid_argument(
        "intertwiner_identity_matrix_error: codomain of V must match domain "
        "of W");
  const Isometry wv = compose(w, v);
  const AlgElement twist = u_element(v).element;
  const Eigen::MatrixXcd intertwiner = represent(rho(w, twist));
  const Eigen::MatrixXcd identity =
      Eigen::MatrixXcd::Identity(intertwiner.rows(), intertwiner.cols());
  double worst =
      max_entry_distance(intertwiner * intertwiner.adjoint(), identity);
  for (int j = 1; j <= v.domain_dim(); ++j) {
    const AlgElement cj = AlgElement::generator(v.domain_dim(), j);
    const Eigen::MatrixXcd lhs = represent(rho(w, sigma(v, cj)));
    const Eigen::MatrixXcd rhs =
        intertwiner * represent(rho(wv, cj)) * intertwiner.adjoint();
    worst = std::max(worst, max_entry_distance(lhs, rhs));
  }
  return worst;
}

bool intertwiner_identity_matrix_check(const Isometry& w, const Isometry& v,
                                       double tol) {
  return intertwiner_identity_matrix_error(w, v) <= tol;
}

}  // namespace carkit
