#include "carkit/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "carkit/rng.hpp"

namespace carkit {

namespace {

void check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("AlgElement: dim must be >= 1");
  if (dim > kMaxGenerators)
    throw std::invalid_argument("AlgElement: dim exceeds the 16-generator cap");
}

void check_same_space(const AlgElement& a, const AlgElement& b,
                      const char* who) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(who) + ": space mismatch");
}

int degree(Mask s) { return std::popcount(s); }

/// Parity of Σ_{t∈T} |{s∈S : s > t}|, the transposition count of moving the
/// generators of T into place past those of S.
bool product_sign_negative(Mask s, Mask t) {
  bool negative = false;
  std::uint64_t rest = t;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    negative ^= (std::popcount(static_cast<std::uint64_t>(s) >> (j + 1)) & 1) != 0;
  }
  return negative;
}

/// Scratch buffers for the dense-accumulator product, reused across calls.
struct MulScratch {
  std::vector<Complex> values;
  std::vector<std::uint8_t> touched;
  std::vector<Mask> touched_masks;

  void ensure(std::size_t size) {
    if (values.size() < size) {
      values.resize(size, Complex(0.0));
      touched.resize(size, 0);
    }
  }
};

}  // namespace

Grade monomial_grade(Mask s) {
  return (std::popcount(s) & 1) ? Grade::odd : Grade::even;
}

AlgElement::AlgElement(int dim) : dim_(dim) { check_dim(dim); }

AlgElement AlgElement::monomial(int dim, Mask mask, Complex coeff) {
  AlgElement a(dim);
  if (mask >= (Mask{1} << dim))
    throw std::invalid_argument("AlgElement::monomial: mask out of range");
  a.add_term(mask, coeff);
  return a;
}

AlgElement AlgElement::generator(int dim, int j) {
  if (j < 1 || j > dim)
    throw std::invalid_argument("AlgElement::generator: index out of range");
  return monomial(dim, Mask{1} << (j - 1));
}

Complex AlgElement::coeff(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void AlgElement::add_term(Mask mask, Complex coeff) {
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) <= kPruneThreshold) terms_.erase(it);
}

void AlgElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= kPruneThreshold)
      it = terms_.erase(it);
    else
      ++it;
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& other) {
  check_same_space(*this, other, "operator+=");
  for (const auto& [mask, coeff] : other.terms_) add_term(mask, coeff);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& other) {
  check_same_space(*this, other, "operator-=");
  for (const auto& [mask, coeff] : other.terms_) add_term(mask, -coeff);
  return *this;
}

AlgElement& AlgElement::operator*=(Complex scalar) {
  if (std::abs(scalar) <= kPruneThreshold) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, coeff] : terms_) coeff *= scalar;
  prune();
  return *this;
}

AlgElement mul(const AlgElement& a, const AlgElement& b) {
  check_same_space(a, b, "mul");
  thread_local MulScratch scratch;
  const std::size_t table = std::size_t{1} << a.dim();
  scratch.ensure(table);
  scratch.touched_masks.clear();

  for (const auto& [s, cs] : a.terms_) {
    for (const auto& [t, ct] : b.terms_) {
      const Mask out = s ^ t;
      Complex contribution = cs * ct;
      if (product_sign_negative(s, t)) contribution = -contribution;
      if (!scratch.touched[out]) {
        scratch.touched[out] = 1;
        scratch.touched_masks.push_back(out);
        scratch.values[out] = contribution;
      } else {
        scratch.values[out] += contribution;
      }
    }
  }

  AlgElement result(a.dim());
  std::sort(scratch.touched_masks.begin(), scratch.touched_masks.end());
  for (const Mask mask : scratch.touched_masks) {
    const Complex value = scratch.values[mask];
    scratch.values[mask] = Complex(0.0);
    scratch.touched[mask] = 0;
    if (std::abs(value) > kPruneThreshold)
      result.terms_.emplace_hint(result.terms_.end(), mask, value);
  }
  return result;
}

std::string AlgElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << coeff.real();
    if (coeff.imag() >= 0.0)
      out << "+" << coeff.imag() << "i)";
    else
      out << coeff.imag() << "i)";
    out << "·";
    if (mask == 0) {
      out << "1";
    } else {
      for (int j = 1; j <= dim_; ++j)
        if (mask & (Mask{1} << (j - 1))) out << "c" << j;
    }
  }
  return out.str();
}

AlgElement b_of(const Vec& k) {
  const int m = static_cast<int>(k.size());
  AlgElement result(m);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 1; j <= m; ++j) {
    const Complex coeff = k(j - 1) * inv_sqrt2;
    if (std::abs(coeff) > kPruneThreshold)
      result += AlgElement::monomial(m, Mask{1} << (j - 1), coeff);
  }
  return result;
}

AlgElement linear_combine(
    const std::vector<std::pair<Complex, AlgElement>>& parts) {
  if (parts.empty())
    throw std::invalid_argument("linear_combine: needs at least one element");
  AlgElement result(parts.front().second.dim());
  for (const auto& [coeff, element] : parts) {
    check_same_space(result, element, "linear_combine");
    result += element * coeff;
  }
  return result;
}

AlgElement adjoint(const AlgElement& a) {
  AlgElement result(a.dim());
  for (const auto& [mask, coeff] : a.terms()) {
    const int d = degree(mask);
    const bool flip = ((d * (d - 1) / 2) & 1) != 0;
    result += AlgElement::monomial(a.dim(), mask,
                                   flip ? -std::conj(coeff) : std::conj(coeff));
  }
  return result;
}

AlgElement gamma(const AlgElement& a) {
  AlgElement result(a.dim());
  for (const auto& [mask, coeff] : a.terms())
    result += AlgElement::monomial(a.dim(), mask,
                                   (degree(mask) & 1) ? -coeff : coeff);
  return result;
}

AlgElement grade_project(const AlgElement& a, Grade g) {
  AlgElement result(a.dim());
  for (const auto& [mask, coeff] : a.terms())
    if (monomial_grade(mask) == g)
      result += AlgElement::monomial(a.dim(), mask, coeff);
  return result;
}

Complex trace(const AlgElement& a) { return a.coeff(0); }

double max_coeff_distance(const AlgElement& a, const AlgElement& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("max_coeff_distance: space mismatch");
  double worst = 0.0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && ia->first < ib->first)) {
      worst = std::max(worst, std::abs(ia->second));
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      worst = std::max(worst, std::abs(ib->second));
      ++ib;
    } else {
      worst = std::max(worst, std::abs(ia->second - ib->second));
      ++ia;
      ++ib;
    }
  }
  return worst;
}

bool approx_eq(const AlgElement& a, const AlgElement& b, double tol) {
  return max_coeff_distance(a, b) <= tol;
}

AlgElement random_element(int dim, int max_degree, std::uint64_t seed) {
  check_dim(dim);
  if (max_degree < 0 || max_degree > dim)
    throw std::invalid_argument("random_element: max_degree out of range");
  SplitMix64 rng(seed);
  AlgElement result(dim);
  for (Mask mask = 0; mask < (Mask{1} << dim); ++mask) {
    if (degree(mask) > max_degree) continue;
    result += AlgElement::monomial(dim, mask, rng.complex_in_box());
  }
  return result;
}

std::pair<AlgElement, AlgElement> split_off_generator(const AlgElement& a,
                                                      int j) {
  if (j < 1 || j > a.dim())
    throw std::invalid_argument("split_off_generator: index out of range");
  const Mask bit = Mask{1} << (j - 1);
  AlgElement without(a.dim());
  AlgElement factored(a.dim());
  for (const auto& [mask, coeff] : a.terms()) {
    if (!(mask & bit)) {
      without += AlgElement::monomial(a.dim(), mask, coeff);
    } else {
      // Pulling c_j to the front crosses the lower-indexed generators.
      const int crossings = std::popcount(mask & (bit - 1));
      factored += AlgElement::monomial(a.dim(), mask ^ bit,
                                       (crossings & 1) ? -coeff : coeff);
    }
  }
  return {std::move(without), std::move(factored)};
}

namespace {

/// Checks f ∈ H = span(polarization_basis) and throws otherwise.
void require_in_polarization(const Vec& f, const char* who) {
  const int m = static_cast<int>(f.size());
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument(std::string(who) +
                                ": space dimension must be even");
  Vec projected = Vec::Zero(m);
  for (const Vec& fa : polarization_basis(m)) projected += fa * inner(fa, f);
  if ((f - projected).norm() > kDerivedTol)
    throw std::invalid_argument(std::string(who) +
                                ": vector not in the polarization subspace");
}

}  // namespace

AlgElement car_annihilator(const Vec& f) {
  require_in_polarization(f, "car_annihilator");
  return b_of(f);
}

AlgElement car_creator(const Vec& f) {
  require_in_polarization(f, "car_creator");
  return b_of(conjugate(f));
}

std::string element_to_json(const AlgElement& a) {
  nlohmann::ordered_json doc;
  doc["dim"] = a.dim();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [mask, coeff] : a.terms()) {
    nlohmann::ordered_json term;
    term["mask"] = mask;
    term["re"] = coeff.real();
    term["im"] = coeff.imag();
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump();
}

AlgElement element_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  AlgElement result(doc.at("dim").get<int>());
  for (const auto& term : doc.at("terms")) {
    result += AlgElement::monomial(
        result.dim(), term.at("mask").get<Mask>(),
        Complex(term.at("re").get<double>(), term.at("im").get<double>()));
  }
  return result;
}

}  // namespace carkit
