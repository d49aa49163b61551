#pragma once

#include <Eigen/Dense>

#include "carkit/algebra.hpp"
#include "carkit/space.hpp"

namespace carkit {

/// Qubits carrying m Majorana generators: ⌈m/2⌉. An odd m is represented
/// inside the (m+1)-generator algebra on the same qubits, which keeps the
/// representation faithful (injective, trace-compatible).
int qubit_count(int m);

/// Jordan-Wigner image of c_j on ⌈m/2⌉ qubits:
///   c_{2a-1} -> Z^{⊗(a-1)} ⊗ X ⊗ I…,  c_{2a} -> Z^{⊗(a-1)} ⊗ Y ⊗ I…
/// Qubit a acts on bit a-1 of the basis index. Hermitian, involutive,
/// pairwise anticommuting.
Eigen::MatrixXcd jw_generator(int j, int m);

/// Linear extension of the Jordan-Wigner assignment to the whole algebra.
/// π is a faithful *-homomorphism; the normalized matrix trace of π(a)
/// equals trace(a).
Eigen::MatrixXcd represent(const AlgElement& a);

/// C*-norm of a: the largest singular value of represent(a).
double operator_norm(const AlgElement& a);

/// Fock vacuum for the standard polarization of K_m (m even): the unit
/// vector killed by every represented annihilator a(f_a). With the pinned
/// conventions this is the all-zeros computational basis vector; the
/// construction verifies the annihilation property rather than assuming it.
Eigen::VectorXcd vacuum(int m);

/// Largest |entry| of a - b.
double max_entry_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Matrix-level intertwining defect for the restriction identity: the
/// maximum over generators c_j of
///   ‖π(ρ_W(σ_V(c_j))) - M·π(ρ_{WV}(c_j))·M†‖_max,  M = π(ρ_W(u_V)),
/// combined with the unitarity defect of M.
double intertwiner_identity_matrix_error(const Isometry& w, const Isometry& v);

/// True iff the matrix-level intertwining identity holds within tol and the
/// explicit intertwiner is unitary.
bool intertwiner_identity_matrix_check(const Isometry& w, const Isometry& v,
                                       double tol = kDerivedTol);

}  // namespace carkit
