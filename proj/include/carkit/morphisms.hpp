#pragma once

// Bogoliubov endomorphisms rho_V, the distinguished odd unitary k_V, the
// twist u_V, the even-subalgebra isomorphism sigma_V with its left inverse,
// the left inverse of rho_V, the conditional expectation onto the even part,
// and the index / statistical-dimension bookkeeping. Everything here is
// symbolic; the matrix-level counterparts live in repr.hpp.

#include <optional>
#include <vector>

#include "carkit/algebra.hpp"
#include "carkit/space.hpp"

namespace carkit {

/// k_V is fixed by ker V* only up to sign; `canonical` pins the sign through
/// kernel_selfconjugate_unit, `flipped` negates it.
enum class KSign { canonical, flipped };

/// The odd skew-adjoint unitary attached to an index -1 isometry:
/// k = b_of(i*sqrt(2)*e) with e the selfconjugate kernel unit.
/// Invariants: k* = -k, k^2 = -1, k anticommutes with b_of(Vh).
struct OddUnitary {
  Vec vector;
  AlgElement element;
};

/// The twist u = (1 + k)/sqrt(2). Invariants: u u* = 1, u^2 = k.
struct TwistUnitary {
  AlgElement element;
};

/// Parts of the unique splitting a = a0 + k_V*a1 + b1 with a0 even and a1
/// odd inside the range subalgebra and b1 odd in the full algebra.
struct Decomposition {
  AlgElement a0;
  AlgElement a1;
  AlgElement b1;
};

/// Unital *-homomorphism out of C(K_m) fixed by its generator images.
/// Basis-monomial images are ordered products, built lazily and cached, so
/// repeated application with the same map stays cheap. The cache is not
/// synchronized; confine an instance to one thread.
class HomomorphismTable {
 public:
  HomomorphismTable(int domain_dim, std::vector<AlgElement> generator_images);

  int domain_dim() const { return domain_dim_; }
  int codomain_dim() const { return codomain_dim_; }

  const AlgElement& image(Mask mask) const;
  AlgElement apply(const AlgElement& a) const;

 private:
  int domain_dim_;
  int codomain_dim_;
  std::vector<AlgElement> generators_;
  mutable std::vector<std::optional<AlgElement>> cache_;
};

/// rho_V: the unital *-endomorphism with rho(b_of(k)) = b_of(Vk).
AlgElement rho(const Isometry& v, const AlgElement& a);
HomomorphismTable rho_table(const Isometry& v);

/// Requires ind V = -1.
OddUnitary k_element(const Isometry& v, KSign sign = KSign::canonical);
TwistUnitary u_element(const Isometry& v, KSign sign = KSign::canonical);

/// sigma_V = Ad(u_V) o rho_V, an isomorphism onto the even subalgebra.
/// On homogeneous a it equals rho(a_even) + k*rho(a_odd).
AlgElement sigma(const Isometry& v, const AlgElement& a,
                 KSign sign = KSign::canonical);
HomomorphismTable sigma_table(const Isometry& v,
                              KSign sign = KSign::canonical);

/// True when the sigma images of the basis monomials are all even and span
/// a subspace of dimension 2^m, i.e. the full even part of the codomain.
bool image_is_even_subalgebra(const Isometry& v, double tol = kDerivedTol);

/// Splits a (on V's codomain) as a0 + k_V*a1 + b1. Requires ind V = -1.
Decomposition decompose(const Isometry& v, const AlgElement& a);

/// Left inverse of sigma_V: a |-> rho_V^{-1}(a0 + a1).
AlgElement sigma_left_inverse(const Isometry& v, const AlgElement& a);

/// Left inverse of rho_V: a |-> sigma_left_inverse(u a u*).
AlgElement rho_left_inverse(const Isometry& v, const AlgElement& a);

/// sigma_V o sigma_left_inverse_V; agrees with the grading mean
/// (a + gamma(a))/2, the conditional expectation onto the even part.
AlgElement cond_expect(const Isometry& v, const AlgElement& a);

/// 2^(-ind(V)/2), computed as sqrt(image_dimension_ratio).
double stat_dimension(const Isometry& v);

/// dim C(K_out) / dim rho_V(C(K_in)) = 2^(codomain - domain), exact dyadic.
double image_dimension_ratio(const Isometry& v);

/// The orthogonal U with U V = V' and U e_V = e_V'; then rho_U o sigma_V
/// equals sigma_V' on generators. Requires ind V = ind V' = -1 and equal
/// shapes.
Isometry transport_unitary(const Isometry& v, const Isometry& v_prime);

/// Worst coefficient deviation over generators in the symbolic identity
/// rho_W(sigma_V(c_j)) = rho_W(u_V) rho_WV(c_j) rho_W(u_V)*, together with
/// unitarity of the intertwiner. Requires ind V = -1 and composable shapes.
double intertwiner_identity_error(const Isometry& w, const Isometry& v);
bool intertwiner_identity_check(const Isometry& w, const Isometry& v,
                                double tol = kDerivedTol);

}  // namespace carkit
