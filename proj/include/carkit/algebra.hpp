#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carkit/space.hpp"

namespace carkit {

/// Monomial index set S ⊆ {1..m}, one bit per Majorana generator.
using Mask = std::uint32_t;

/// Masks live in a 32-bit word; 16 generators keep every suite at desk scale.
inline constexpr int kMaxGenerators = 16;

/// Coefficients of magnitude <= this are pruned from the table.
inline constexpr double kPruneThreshold = 1e-14;

/// ℤ₂ grade of an element: even (fixed by γ) or odd (negated by γ).
enum class Grade : int { even = 0, odd = 1 };

/// Grade of the monomial c_S, i.e. |S| mod 2.
Grade monomial_grade(Mask s);

/// Element of the selfdual CAR algebra C(K) over an m-dimensional ConjSpace,
/// stored as a sparse table {mask -> coefficient} over ordered Majorana
/// monomials c_S = c_{j1}···c_{jd}, j1 < ... < jd. The generators satisfy
/// c_j = c_j*, c_j² = 1, c_i c_j = -c_j c_i (i ≠ j). The table is canonical:
/// ascending masks, no coefficient of magnitude <= 1e-14.
class AlgElement {
 public:
  /// The zero element on m generators.
  explicit AlgElement(int dim);

  static AlgElement zero(int dim) { return AlgElement(dim); }
  static AlgElement unit(int dim) { return monomial(dim, 0); }
  static AlgElement monomial(int dim, Mask mask, Complex coeff = 1.0);
  /// The Majorana generator c_j, 1-based.
  static AlgElement generator(int dim, int j);

  int dim() const { return dim_; }
  ConjSpace space() const { return {dim_}; }
  const std::map<Mask, Complex>& terms() const { return terms_; }
  Complex coeff(Mask mask) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  AlgElement& operator+=(const AlgElement& other);
  AlgElement& operator-=(const AlgElement& other);
  AlgElement& operator*=(Complex scalar);

  friend AlgElement operator+(AlgElement a, const AlgElement& b) {
    a += b;
    return a;
  }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) {
    a -= b;
    return a;
  }
  friend AlgElement operator*(AlgElement a, Complex scalar) {
    a *= scalar;
    return a;
  }
  friend AlgElement operator*(Complex scalar, AlgElement a) {
    a *= scalar;
    return a;
  }
  friend AlgElement operator-(AlgElement a) {
    a *= Complex(-1.0);
    return a;
  }
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    return mul(a, b);
  }

  /// Algebra product: bilinear extension of
  ///   c_S · c_T = sign(S,T) · c_{S △ T},
  /// where sign counts the transpositions moving each generator of T past
  /// the higher-indexed generators of S.
  friend AlgElement mul(const AlgElement& a, const AlgElement& b);

  /// Human-readable form, e.g. "(0.5+0.5i)·1 + (1i)·c1c2".
  std::string to_string() const;

 private:
  void add_term(Mask mask, Complex coeff);
  void prune();

  int dim_;
  std::map<Mask, Complex> terms_;
};

/// The generator element B(k) = Σ_j k_j c_j / √2; linear in k and satisfying
/// B(k)* = B(conjugate(k)) and B(k*)B(k') + B(k')B(k*) = ⟨k,k'⟩·1.
AlgElement b_of(const Vec& k);

/// Σ coeff_i · a_i with pruning; all elements must share one space.
AlgElement linear_combine(
    const std::vector<std::pair<Complex, AlgElement>>& parts);

/// *-operation: antilinear, product-reversing; on monomials
/// (c_S)* = (-1)^{|S|(|S|-1)/2} c_S.
AlgElement adjoint(const AlgElement& a);

/// Grading automorphism γ = ρ_{-1}: multiplies c_S by (-1)^{|S|}.
AlgElement gamma(const AlgElement& a);

/// Projection onto the grade-g part; grade_project(a,even) = (a + γ(a))/2.
AlgElement grade_project(const AlgElement& a, Grade g);

/// Normalized trace: the coefficient of the empty monomial. τ(1) = 1,
/// τ(ab) = τ(ba), τ(a*a) >= 0, and the monomial basis is τ-orthonormal.
Complex trace(const AlgElement& a);

/// Largest coefficient difference over the union of the two tables.
double max_coeff_distance(const AlgElement& a, const AlgElement& b);

bool approx_eq(const AlgElement& a, const AlgElement& b,
               double tol = kStructuralTol);

/// Seeded element with coefficients on every monomial of degree <= max_degree.
AlgElement random_element(int dim, int max_degree, std::uint64_t seed);

/// Unique split a = x + c_j·y with x, y free of generator j. The signs come
/// from pulling c_j to the front of each monomial containing it.
std::pair<AlgElement, AlgElement> split_off_generator(const AlgElement& a,
                                                      int j);

/// CAR annihilator a(f) = B(f) for f in the polarization subspace H
/// (span of polarization_basis); linear in f. Rejects f with a component
/// outside H (projection residual > 1e-10).
AlgElement car_annihilator(const Vec& f);

/// CAR creator a(f)* = B(conjugate(f)), antilinear in f; same domain check.
AlgElement car_creator(const Vec& f);

/// JSON round-trip with schema
/// {"dim": m, "terms": [{"mask": int, "re": float, "im": float}]},
/// masks ascending.
std::string element_to_json(const AlgElement& a);
AlgElement element_from_json(const std::string& text);

}  // namespace carkit
