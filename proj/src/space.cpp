#include "carkit/space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "carkit/rng.hpp"

namespace carkit {

Vec basis_vector(int m, int j) {
  if (m < 1) throw std::invalid_argument("basis_vector: dimension must be >= 1");
  if (j < 1 || j > m)
    throw std::invalid_argument("basis_vector: index out of range");
  Vec e = Vec::Zero(m);
  e(j - 1) = 1.0;
  return e;
}

Vec conjugate(const Vec& k) { return k.conjugate(); }

Complex inner(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("inner: dimension mismatch");
  return (a.adjoint() * b)(0);
}

Isometry::Isometry(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1 || matrix_.cols() < 1)
    throw std::invalid_argument("Isometry: dimensions must be >= 1");
  const auto gram = matrix_.transpose() * matrix_;
  const double defect =
      (gram - Eigen::MatrixXd::Identity(matrix_.cols(), matrix_.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (defect > kStructuralTol)
    throw std::invalid_argument(
        "Isometry: columns not orthonormal (defect " + std::to_string(defect) +
        ")");
}

Isometry Isometry::identity(int m) {
  return Isometry(Eigen::MatrixXd::Identity(m, m));
}

Vec Isometry::apply(const Vec& k) const {
  if (k.size() != domain_dim())
    throw std::invalid_argument("Isometry::apply: dimension mismatch");
  return matrix_ * k;
}

int fredholm_index(const Isometry& v) {
  return v.domain_dim() - v.codomain_dim();
}

Isometry shift_isometry(int m) {
  if (m < 1) throw std::invalid_argument("shift_isometry: m must be >= 1");
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m + 1, m);
  for (int j = 0; j < m; ++j) s(j + 1, j) = 1.0;
  return Isometry(std::move(s));
}

Isometry random_isometry(int m_in, int m_out, std::uint64_t seed) {
  if (m_in < 1) throw std::invalid_argument("random_isometry: m_in must be >= 1");
  if (m_in > m_out)
    throw std::invalid_argument("random_isometry: m_in must be <= m_out");
  SplitMix64 rng(seed);
  for (;;) {
    Eigen::MatrixXd g(m_out, m_in);
    for (int i = 0; i < m_out; ++i)
      for (int j = 0; j < m_in; ++j) g(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd r = qr.matrixQR()
                            .topLeftCorner(m_in, m_in)
                            .triangularView<Eigen::Upper>();
    // A nearly singular draw would make the column signs ill-determined;
    // redraw from the same stream (still deterministic in the seed).
    if (r.diagonal().cwiseAbs().minCoeff() < 1e-8) continue;
    Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(m_out, m_in);
    for (int j = 0; j < m_in; ++j)
      if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    return Isometry(std::move(q));
  }
}

Isometry compose(const Isometry& w, const Isometry& v) {
  if (v.codomain_dim() != w.domain_dim())
    throw std::invalid_argument("compose: codomain of V must match domain of W");
  return Isometry(w.matrix() * v.matrix());
}

Vec kernel_selfconjugate_unit(const Isometry& v) {
  if (fredholm_index(v) != -1)
    throw std::invalid_argument(
        "kernel_selfconjugate_unit: requires ind V = -1");
  const int n = v.codomain_dim();
  // Full QR: the first m_in columns of Q span ran V, the last one ker V*.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(v.matrix());
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd e = q.col(n - 1);
  for (int i = 0; i < n; ++i) {
    if (std::abs(e(i)) > 1e-9) {
      if (e(i) < 0.0) e = -e;
      break;
    }
  }
  return e.cast<Complex>();
}

std::vector<Vec> polarization_basis(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("polarization_basis: m must be even and >= 2");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Vec> basis;
  basis.reserve(m / 2);
  for (int a = 1; a <= m / 2; ++a) {
    Vec f = Vec::Zero(m);
    f(2 * a - 2) = inv_sqrt2;
    f(2 * a - 1) = Complex(0.0, inv_sqrt2);
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace carkit
