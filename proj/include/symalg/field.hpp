#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symalg {

/// An element of GF(p^e). The code is the integer whose base-p digits are the
/// coefficients of the representing polynomial (lowest degree first), so the
/// representation is canonical and equality is plain integer equality.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr FieldElement kZero{0};
inline constexpr FieldElement kOne{1};

bool is_prime(std::uint64_t n);

/// Least e >= 1 with p^e = 1 (mod m). Throws InputError when gcd(p, m) != 1.
unsigned multiplicative_order(std::uint64_t p, std::uint64_t m);

/// Finite field GF(p^e), table driven. Orders above 2^20 are rejected.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// Builds GF(p^e) with the lexicographically first monic irreducible
  /// modulus of degree e (coefficients compared from x^(e-1) down to x^0).
  Field(std::uint32_t p, unsigned e);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  // Monic modulus, lowest coefficient first. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement from_int(std::int64_t n) const;
  FieldElement element(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  // The class of x in GF(p)[x]/(modulus), i.e. the GF(p)-basis generator.
  FieldElement generator() const;
  FieldElement primitive_element() const { return FieldElement{exp_[1]}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (e_ == 1) {
      std::uint32_t s = a.code + b.code;
      return FieldElement{s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return FieldElement{a.code ^ b.code};
    if (!add_table_.empty()) return FieldElement{add_table_[a.code * q_ + b.code]};
    return add_zech(a, b);
  }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return kZero;
    return FieldElement{exp_[log_[a.code] + log_[b.code]]};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t n) const;
  // a^p
  FieldElement frobenius(FieldElement a) const { return pow(a, p_); }
  // a -> a^(1/p), the inverse Frobenius.
  FieldElement pth_root(FieldElement a) const;

  std::string to_string(FieldElement a) const;
  std::string name() const;

  friend bool operator==(const Field& x, const Field& y) {
    return x.p_ == y.p_ && x.e_ == y.e_ && x.modulus_ == y.modulus_;
  }

 private:
  FieldElement add_digits(FieldElement a, FieldElement b) const;
  FieldElement add_zech(FieldElement a, FieldElement b) const;
  static constexpr std::uint32_t kNoZech = 0xffffffffu;

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[i] = g^i
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> zech_;
};

}  // namespace symalg
