#include "symalg/field.hpp"

#include <numeric>
#include <sstream>

#include "symalg/errors.hpp"

namespace symalg {
namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Digits mod_monic(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Digits decode(std::uint64_t code, std::uint32_t p, unsigned len) {
  Digits d(len);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg/2; desk-scale fields keep the scan cheap.
bool irreducible(const Digits& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g = decode(code, p, d);
      g.push_back(1);
      if (mod_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned multiplicative_order(std::uint64_t p, std::uint64_t m) {
  if (m == 0 || std::gcd(p, m) != 1) {
    throw InputError("multiplicative_order: gcd(" + std::to_string(p) + ", " +
                     std::to_string(m) + ") != 1");
  }
  if (m == 1) return 1;
  const std::uint64_t base = p % m;
  std::uint64_t acc = base;
  unsigned e = 1;
  while (acc != 1) {
    acc = acc * base % m;
    ++e;
  }
  return e;
}

Field::Field(std::uint32_t p, unsigned e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InputError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InputError("field GF(" + std::to_string(p) + "^" + std::to_string(e) +
                       ") exceeds the supported order 2^20");
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  if (e > 1) {
    // Lower coefficients enumerated as a base-p counter with x^(e-1) most
    // significant: lexicographic order on (c_{e-1}, ..., c_0).
    for (std::uint64_t code = 0; code < q; ++code) {
      Digits f = decode(code, p, e);
      f.push_back(1);
      if (irreducible(f, p)) {
        modulus_ = std::move(f);
        break;
      }
    }
  }

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    Digits da = decode(a, p_, e_), db = decode(b, p_, e_);
    Digits prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    Digits r = mod_monic(std::move(prod), modulus_, p_);
    std::uint32_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return code;
  };

  const std::uint64_t group_order = q - 1;
  const auto factors = prime_factors(group_order);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t n) {
    std::uint32_t r = 1;
    while (n) {
      if (n & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 1;
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, group_order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }

  exp_.assign(2 * group_order + 1, 0);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    exp_[i] = x;
    exp_[i + group_order] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, gen);
  }
  exp_[2 * group_order] = 1;

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits d = decode(a, p_, e_);
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + (p_ - d[i]) % p_;
    neg_[a] = code;
  }

  if (e_ > 1 && p_ != 2 && q_ <= 1024) {
    add_table_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[std::size_t{a} * q_ + b] = add_digits(FieldElement{a}, FieldElement{b}).code;
      }
    }
  } else if (e_ > 1 && p_ != 2) {
    // Zech logarithms: 1 + g^k = g^zech_[k]
    zech_.resize(group_order);
    for (std::uint64_t k = 0; k < group_order; ++k) {
      const std::uint32_t s = add_digits(FieldElement{exp_[k]}, kOne).code;
      zech_[k] = s == 0 ? kNoZech : log_[s];
    }
  }
}

FieldElement Field::add_zech(FieldElement a, FieldElement b) const {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t order = q_ - 1;
  std::uint32_t k = log_[b.code] + order - log_[a.code];
  if (k >= order) k -= order;
  const std::uint32_t z = zech_[k];
  if (z == kNoZech) return kZero;
  return FieldElement{exp_[log_[a.code] + z]};
}

FieldElement Field::add_digits(FieldElement a, FieldElement b) const {
  std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return FieldElement{out};
}

FieldElement Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement Field::element(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) throw InputError("too many coefficients for GF(" + std::to_string(q_) + ")");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
  return FieldElement{code};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const { return decode(a.code, p_, e_); }

FieldElement Field::generator() const {
  if (e_ == 1) return kOne;
  return FieldElement{p_};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in " + name());
  const std::uint32_t group_order = q_ - 1;
  return FieldElement{exp_[(group_order - log_[a.code]) % group_order]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const {
  if (n == 0) return kOne;
  if (a.code == 0) return kZero;
  const std::uint64_t group_order = q_ - 1;
  return FieldElement{exp_[(log_[a.code] * (n % group_order)) % group_order]};
}

FieldElement Field::pth_root(FieldElement a) const {
  // Frobenius has order e on GF(p^e), so its inverse is a^(p^(e-1)).
  FieldElement r = a;
  for (unsigned i = 1; i < e_; ++i) r = frobenius(r);
  return r;
}

std::string Field::to_string(FieldElement a) const {
  if (e_ == 1) return std::to_string(a.code);
  const auto d = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << "w";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string Field::name() const {
  return "GF(" + std::to_string(q_) + ")";
}

}  // namespace symalg
