#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace carkit {

using Complex = std::complex<double>;

/// Column vector over a ConjSpace, coordinates in the self-conjugate basis.
using Vec = Eigen::VectorXcd;

/// Tolerance for structural checks (orthonormality, unitarity, exact
/// identities of linear maps).
inline constexpr double kStructuralTol = 1e-12;

/// Tolerance for derived numerical checks, with slack for accumulation.
inline constexpr double kDerivedTol = 1e-10;

/// Finite-dimensional complex Hilbert space carrying a distinguished
/// self-conjugate orthonormal basis e_1..e_dim. Conjugation is the
/// componentwise antilinear involution in that basis.
struct ConjSpace {
  int dim;

  friend bool operator==(const ConjSpace&, const ConjSpace&) = default;
};

/// Standard basis vector e_j (1-based) of the m-dimensional space.
Vec basis_vector(int m, int j);

/// Componentwise complex conjugation; an antilinear involution.
Vec conjugate(const Vec& k);

/// Inner product, conjugate-linear in the first argument.
Complex inner(const Vec& a, const Vec& b);

/// Conjugation-commuting linear isometry between two ConjSpaces. In the
/// self-conjugate bases such a map is exactly a real matrix with orthonormal
/// columns; the constructor validates orthonormality to within 1e-12.
class Isometry {
 public:
  explicit Isometry(Eigen::MatrixXd matrix);

  static Isometry identity(int m);

  int domain_dim() const { return static_cast<int>(matrix_.cols()); }
  int codomain_dim() const { return static_cast<int>(matrix_.rows()); }
  ConjSpace domain() const { return {domain_dim()}; }
  ConjSpace codomain() const { return {codomain_dim()}; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  /// Image of a domain vector.
  Vec apply(const Vec& k) const;

 private:
  Eigen::MatrixXd matrix_;
};

/// ind V = dim(domain) - dim(codomain) = -dim ker V*.
int fredholm_index(const Isometry& v);

/// The shift V: K_m -> K_{m+1}, e_j -> e_{j+1}. Canonical index -1 witness.
Isometry shift_isometry(int m);

/// Deterministic random isometry K_{m_in} -> K_{m_out}: QR orthonormalization
/// of a seeded Gaussian matrix, signs fixed so the R diagonal is positive.
Isometry random_isometry(int m_in, int m_out, std::uint64_t seed);

/// Composition W∘V; Fredholm indices add.
Isometry compose(const Isometry& w, const Isometry& v);

inline Isometry operator*(const Isometry& w, const Isometry& v) {
  return compose(w, v);
}

/// For ind V = -1: the self-conjugate unit vector e spanning ker V*, sign
/// pinned so the first coordinate of magnitude > 1e-9 is positive.
Vec kernel_selfconjugate_unit(const Isometry& v);

/// Orthonormal basis f_a = (e_{2a-1} + i e_{2a})/√2, a = 1..m/2, of a
/// polarization H with K = H ⊕ H*. Requires m even.
std::vector<Vec> polarization_basis(int m);

}  // namespace carkit
