#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "carkit/algebra.hpp"
#include "carkit/morphisms.hpp"
#include "carkit/rng.hpp"
#include "carkit/space.hpp"

using namespace carkit;

namespace {

const Complex kI{0.0, 1.0};

AlgElement c(int dim, int j) { return AlgElement::generator(dim, j); }

Isometry minus_identity(int m) {
  return Isometry(-Eigen::MatrixXd::Identity(m, m));
}

}  // namespace

TEST_SUITE("morphisms") {

TEST_CASE("rho acts on generators through the symbol") {
  CHECK(approx_eq(rho(shift_isometry(1), c(1, 1)), c(2, 2)));
  const AlgElement a = random_element(3, 3, 11);
  CHECK(max_coeff_distance(rho(Isometry::identity(3), a), a) == 0.0);
  // the grading is the Bogoliubov endomorphism of -1
  CHECK(max_coeff_distance(rho(minus_identity(3), a), gamma(a)) <=
        kStructuralTol);
  CHECK_THROWS_AS(rho(shift_isometry(2), AlgElement::unit(3)),
                  std::invalid_argument);
}

TEST_CASE("rho is a unital *-endomorphism") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Isometry v = random_isometry(3, 5, seed);
    const HomomorphismTable table = rho_table(v);
    const AlgElement a = random_element(3, 3, seed + 10);
    const AlgElement b = random_element(3, 3, seed + 20);
    CHECK(max_coeff_distance(table.apply(a) * table.apply(b),
                             table.apply(a * b)) <= 1e-12);
    CHECK(max_coeff_distance(adjoint(table.apply(a)),
                             table.apply(adjoint(a))) <= 1e-12);
    CHECK(max_coeff_distance(table.apply(AlgElement::unit(3)),
                             AlgElement::unit(5)) == 0.0);
    // tau is rho-invariant: monomial images have zero trace
    CHECK(std::abs(trace(table.apply(a)) - trace(a)) <= 1e-12);
  }
}

TEST_CASE("homomorphism table guards its inputs") {
  CHECK_THROWS_AS(HomomorphismTable(2, {c(3, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(HomomorphismTable(2, {c(3, 1), c(4, 1)}),
                  std::invalid_argument);
  const HomomorphismTable table(2, {c(3, 1), c(3, 2)});
  CHECK(approx_eq(table.image(0), AlgElement::unit(3)));
  CHECK(approx_eq(table.image(0b11), c(3, 1) * c(3, 2)));
  CHECK_THROWS_AS(table.image(4), std::invalid_argument);
  CHECK_THROWS_AS(table.apply(AlgElement::unit(3)), std::invalid_argument);
}

TEST_CASE("k element is the distinguished odd skew-adjoint unitary") {
  const OddUnitary k = k_element(shift_isometry(1));
  CHECK(approx_eq(k.element, kI * c(2, 1)));
  CHECK((k.vector - basis_vector(2, 1)).norm() == 0.0);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Isometry v = random_isometry(3, 4, seed);
    const AlgElement ke = k_element(v).element;
    const AlgElement unit = AlgElement::unit(4);
    CHECK(max_coeff_distance(adjoint(ke), -ke) <= kStructuralTol);
    CHECK(max_coeff_distance(ke * ke, -unit) <= kStructuralTol);
    CHECK(max_coeff_distance(adjoint(ke) * ke, unit) <= kStructuralTol);
    // k anticommutes with the image of the domain
    const AlgElement img = rho(v, c(3, 2));
    CHECK(max_coeff_distance(ke * img, -(img * ke)) <= kStructuralTol);
    CHECK(max_coeff_distance(k_element(v, KSign::flipped).element, -ke) ==
          0.0);
  }
  CHECK_THROWS_AS(k_element(Isometry::identity(2)), std::invalid_argument);
}

TEST_CASE("twist element implements the flip") {
  const TwistUnitary u1 = u_element(shift_isometry(1));
  const AlgElement expected = linear_combine(
      {{std::numbers::sqrt2 / 2.0, AlgElement::unit(2)},
       {Complex(0.0, std::numbers::sqrt2 / 2.0), c(2, 1)}});
  CHECK(max_coeff_distance(u1.element, expected) <= kStructuralTol);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Isometry v = random_isometry(2, 3, seed);
    const AlgElement u = u_element(v).element;
    const AlgElement k = k_element(v).element;
    CHECK(max_coeff_distance(u * adjoint(u), AlgElement::unit(3)) <=
          kStructuralTol);
    CHECK(max_coeff_distance(u * u, k) <= kStructuralTol);
  }
}

TEST_CASE("sigma reproduces the worked low-dimensional images") {
  // m = 1: sigma(c1) = i c1 c2
  CHECK(max_coeff_distance(sigma(shift_isometry(1), c(1, 1)),
                           kI * AlgElement::monomial(2, 0b11)) <=
        kStructuralTol);
  // m = 2: sigma(c1 c2) = rho(c1 c2) = c2 c3
  CHECK(max_coeff_distance(sigma(shift_isometry(2), c(2, 1) * c(2, 2)),
                           AlgElement::monomial(3, 0b110)) <=
        kStructuralTol);
}

TEST_CASE("sigma agrees with the twisted endomorphism on random input") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int m = 1 + static_cast<int>(seed % 4);
    const Isometry v = random_isometry(m, m + 1, seed);
    const AlgElement a = random_element(m, m, seed + 31);
    const AlgElement u = u_element(v).element;
    CHECK(max_coeff_distance(sigma(v, a), u * rho(v, a) * adjoint(u)) <=
          1e-12);
    // closed form on odd vectors: sigma(b(k)) = k_V b(Vk)
    SplitMix64 rng(seed);
    Vec k(m);
    for (int i = 0; i < m; ++i) k(i) = rng.complex_in_box();
    CHECK(max_coeff_distance(sigma(v, b_of(k)),
                             k_element(v).element * b_of(v.apply(k))) <=
          1e-12);
  }
}

TEST_CASE("sigma image fills the even subalgebra") {
  for (int m = 1; m <= 4; ++m) CHECK(image_is_even_subalgebra(shift_isometry(m)));
  CHECK(image_is_even_subalgebra(random_isometry(3, 4, 5)));
  CHECK_THROWS_AS(image_is_even_subalgebra(Isometry::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("decompose reproduces the worked example and its structure") {
  const Isometry v = shift_isometry(1);
  const Decomposition parts = decompose(v, kI * AlgElement::monomial(2, 0b11));
  CHECK(max_coeff_distance(parts.a0, AlgElement::zero(2)) <= kStructuralTol);
  CHECK(max_coeff_distance(parts.a1, c(2, 2)) <= kStructuralTol);
  CHECK(max_coeff_distance(parts.b1, AlgElement::zero(2)) <= kStructuralTol);
  // c2 = rho(c1) is odd, so it lands entirely in b1
  const Decomposition odd_parts = decompose(v, c(2, 2));
  CHECK(max_coeff_distance(odd_parts.a0, AlgElement::zero(2)) <=
        kStructuralTol);
  CHECK(max_coeff_distance(odd_parts.a1, AlgElement::zero(2)) <=
        kStructuralTol);
  CHECK(max_coeff_distance(odd_parts.b1, c(2, 2)) <= kStructuralTol);
  CHECK_THROWS_AS(decompose(Isometry::identity(2), AlgElement::unit(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(decompose(v, AlgElement::unit(3)), std::invalid_argument);
}

TEST_CASE("decompose splits uniquely against planted parts") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int m = 1 + static_cast<int>(seed % 3);
    const Isometry v = random_isometry(m, m + 1, seed);
    const AlgElement k = k_element(v).element;
    const AlgElement a0 = rho(
        v, grade_project(random_element(m, m, seed + 40), Grade::even));
    const AlgElement a1 = rho(
        v, grade_project(random_element(m, m, seed + 41), Grade::odd));
    const AlgElement b1 = grade_project(
        random_element(m + 1, m + 1, seed + 42), Grade::odd);
    const Decomposition parts = decompose(v, a0 + k * a1 + b1);
    CHECK(max_coeff_distance(parts.a0, a0) <= 1e-12);
    CHECK(max_coeff_distance(parts.a1, a1) <= 1e-12);
    CHECK(max_coeff_distance(parts.b1, b1) <= 1e-12);
  }
}

TEST_CASE("left inverses undo sigma and rho") {
  CHECK(max_coeff_distance(
            sigma_left_inverse(shift_isometry(1),
                               kI * AlgElement::monomial(2, 0b11)),
            c(1, 1)) <= kStructuralTol);
  CHECK(sigma_left_inverse(shift_isometry(1), c(2, 2)).is_zero());
  CHECK(max_coeff_distance(rho_left_inverse(shift_isometry(1), c(2, 2)),
                           c(1, 1)) <= kStructuralTol);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int m = 1 + static_cast<int>(seed % 4);
    const Isometry v = random_isometry(m, m + 1, seed);
    const AlgElement a = random_element(m, m, seed + 60);
    CHECK(max_coeff_distance(sigma_left_inverse(v, sigma(v, a)), a) <=
          1e-12);
    CHECK(max_coeff_distance(rho_left_inverse(v, rho(v, a)), a) <= 1e-12);
  }
}

TEST_CASE("conditional expectation is the grading mean") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int m = 1 + static_cast<int>(seed % 4);
    const Isometry v = random_isometry(m, m + 1, seed);
    const AlgElement a = random_element(m + 1, m + 1, seed + 70);
    const AlgElement expected = 0.5 * (a + gamma(a));
    CHECK(max_coeff_distance(cond_expect(v, a), expected) <= 1e-12);
    // idempotent positive unital projection
    CHECK(max_coeff_distance(cond_expect(v, cond_expect(v, a)),
                             cond_expect(v, a)) <= 1e-12);
    CHECK(max_coeff_distance(cond_expect(v, AlgElement::unit(m + 1)),
                             AlgElement::unit(m + 1)) <= 1e-12);
  }
}

TEST_CASE("index powers the dimension bookkeeping exactly") {
  const Isometry s1 = shift_isometry(1);
  CHECK(stat_dimension(s1) == std::numbers::sqrt2);
  CHECK(image_dimension_ratio(s1) == 2.0);
  CHECK(stat_dimension(Isometry::identity(3)) == 1.0);
  const Isometry twice = compose(shift_isometry(2), shift_isometry(1));
  CHECK(image_dimension_ratio(twice) == 4.0);
  CHECK(stat_dimension(twice) == 2.0);
  const Isometry thrice =
      compose(shift_isometry(3), compose(shift_isometry(2), shift_isometry(1)));
  CHECK(image_dimension_ratio(thrice) == 8.0);
  CHECK(stat_dimension(thrice) == std::sqrt(8.0));
  // the ratio is always the exact square
  for (const Isometry* v : {&s1, &twice, &thrice})
    CHECK(stat_dimension(*v) == std::sqrt(image_dimension_ratio(*v)));
}

TEST_CASE("transport unitary carries sigma_V to sigma_V'") {
  const Isometry u0 = transport_unitary(shift_isometry(1), shift_isometry(1));
  CHECK((u0.matrix() - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs()
            .maxCoeff() <= kStructuralTol);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int m = 2 + static_cast<int>(seed % 3);
    const Isometry v = random_isometry(m, m + 1, seed);
    const Isometry v_prime = random_isometry(m, m + 1, seed + 500);
    const Isometry u = transport_unitary(v, v_prime);
    CHECK(fredholm_index(u) == 0);
    for (int j = 1; j <= m; ++j) {
      CHECK(max_coeff_distance(rho(u, sigma(v, c(m, j))),
                               sigma(v_prime, c(m, j))) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(transport_unitary(shift_isometry(1), shift_isometry(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      transport_unitary(Isometry::identity(2), shift_isometry(1)),
      std::invalid_argument);
}

TEST_CASE("sign flip composes sigma with the grading on generators") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const int m = 1 + static_cast<int>(seed % 3);
    const Isometry v = random_isometry(m, m + 1, seed);
    for (int j = 1; j <= m; ++j)
      CHECK(max_coeff_distance(sigma(v, c(m, j), KSign::flipped),
                               sigma(v, gamma(c(m, j)))) == 0.0);
  }
}

TEST_CASE("symbolic intertwiner identity") {
  CHECK(intertwiner_identity_check(shift_isometry(2), shift_isometry(1)));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Isometry v = random_isometry(2, 3, seed);
    const Isometry w = random_isometry(3, 3 + static_cast<int>(seed % 3),
                                       seed + 900);
    CHECK(intertwiner_identity_error(w, v) <= 1e-12);
    CHECK(fredholm_index(compose(w, v)) == fredholm_index(w) - 1);
  }
  CHECK_THROWS_AS(
      intertwiner_identity_error(shift_isometry(2), Isometry::identity(2)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      intertwiner_identity_error(shift_isometry(3), shift_isometry(1)),
      std::invalid_argument);
}

}  // TEST_SUITE
