#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symalg/field.hpp"
#include "symalg/linalg.hpp"

namespace symalg {

/// Univariate polynomial over a finite field, lowest coefficient first, with
/// trailing zeros stripped. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);

  static Poly constant(FieldElement c) { return Poly({c}); }
  static Poly x() { return Poly({kZero, kOne}); }
  static Poly monomial(std::size_t degree, FieldElement c = kOne);

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  FieldElement leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }
  FieldElement operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == kOne; }

  std::string to_string(const Field& f) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<FieldElement> coeffs_;
};

namespace poly {

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, FieldElement s, const Poly& a);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& a);
// Monic gcd (zero when both inputs are zero).
Poly gcd(const Field& f, const Poly& a, const Poly& b);
// Returns (g, s, t) with s a + t b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd extended_gcd(const Field& f, const Poly& a, const Poly& b);
Poly derivative(const Field& f, const Poly& a);
Poly powmod(const Field& f, Poly base, std::uint64_t exponent, const Poly& modulus);
FieldElement evaluate(const Field& f, const Poly& a, FieldElement x);

}  // namespace poly

/// Monic polynomial of least degree annihilating the square matrix m, found by
/// growing the span of I, m, m^2, ... until the first dependency.
Poly minimal_polynomial(const Field& f, const Matrix& m);

/// Monic polynomial of least degree annihilating a sequence v_0, v_1 = T v_0,
/// ... produced by `next`, i.e. the first dependency in the Krylov sequence.
template <class Next>
Poly krylov_minimal_polynomial(const Field& f, Vector start, Next&& next) {
  DependencyTracker tracker(f, start.size());
  Vector cur = std::move(start);
  for (;;) {
    if (auto rel = tracker.push(cur)) return Poly(std::move(*rel));
    cur = next(cur);
  }
}

/// Splits monic f (degree >= 1) into monic coprime factors f1 f2 = f of
/// positive degree, or returns nullopt when f is a power of one irreducible.
std::optional<std::pair<Poly, Poly>> coprime_split(const Field& field, const Poly& f);

/// Every root of f in the field, by exhaustive scan.
std::vector<FieldElement> roots(const Field& field, const Poly& f);
/// Whether f (nonzero) has a root in the field: gcd(f, x^q - x) != 1.
bool has_root(const Field& field, const Poly& f);

}  // namespace symalg
