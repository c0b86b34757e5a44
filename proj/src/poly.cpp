#include "symalg/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace symalg {

Poly::Poly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == kZero) coeffs_.pop_back();
}

Poly Poly::monomial(std::size_t degree, FieldElement c) {
  std::vector<FieldElement> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

std::string Poly::to_string(const Field& f) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == kZero) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = coeffs_[i] == kOne;
    if (!unit || i == 0) {
      const std::string c = f.to_string(coeffs_[i]);
      if (f.degree() > 1 && i > 0) {
        os << "(" << c << ")";
      } else {
        os << c;
      }
    }
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

namespace poly {

Poly add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
  return Poly(std::move(v));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<FieldElement> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
  return Poly(std::move(v));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<FieldElement> v(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a[i] == kZero) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a[i], b[j]));
    }
  }
  return Poly(std::move(v));
}

Poly scale(const Field& f, FieldElement s, const Poly& a) {
  std::vector<FieldElement> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(s, a[i]);
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<FieldElement> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<FieldElement> q(r.size() - db);
  const FieldElement inv_lead = f.inv(b.leading());
  for (std::size_t k = q.size(); k-- > 0;) {
    const FieldElement c = f.mul(r[k + db], inv_lead);
    q[k] = c;
    if (c == kZero) continue;
    const FieldElement nc = f.neg(c);
    for (std::size_t i = 0; i <= db; ++i) r[k + i] = f.add(r[k + i], f.mul(nc, b[i]));
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(f, f.inv(a.leading()), a);
}

Poly gcd(const Field& f, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(f, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(f, x);
}

ExtendedGcd extended_gcd(const Field& f, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(kOne), s1;
  Poly t0, t1 = Poly::constant(kOne);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(f, r0, r1);
    Poly s2 = sub(f, s0, mul(f, q, s1));
    Poly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const FieldElement inv = f.inv(r0.leading());
  return {scale(f, inv, r0), scale(f, inv, s0), scale(f, inv, t0)};
}

Poly derivative(const Field& f, const Poly& a) {
  if (a.degree() < 1) return Poly();
  std::vector<FieldElement> v(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    v[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), a[i]);
  }
  return Poly(std::move(v));
}

Poly powmod(const Field& f, Poly base, std::uint64_t exponent, const Poly& modulus) {
  Poly result = rem(f, Poly::constant(kOne), modulus);
  base = rem(f, base, modulus);
  while (exponent) {
    if (exponent & 1) result = rem(f, mul(f, result, base), modulus);
    exponent >>= 1;
    if (exponent) base = rem(f, mul(f, base, base), modulus);
  }
  return result;
}

FieldElement evaluate(const Field& f, const Poly& a, FieldElement x) {
  FieldElement acc = kZero;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

}  // namespace poly

Poly minimal_polynomial(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: matrix not square");
  const std::size_t n = m.rows();
  Matrix id = Matrix::identity(n);
  return krylov_minimal_polynomial(f, id.data(), [&](const Vector& flat) {
    Matrix cur(n, n, flat);
    return multiply(f, cur, m).data();
  });
}

std::vector<FieldElement> roots(const Field& field, const Poly& f) {
  std::vector<FieldElement> out;
  for (std::uint32_t c = 0; c < field.order(); ++c) {
    if (poly::evaluate(field, f, FieldElement{c}) == kZero) out.push_back(FieldElement{c});
  }
  return out;
}

bool has_root(const Field& field, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("has_root: zero polynomial");
  if (f.degree() < 1) return false;
  const Poly x = Poly::x();
  const Poly xq = poly::powmod(field, x, field.order(), f);
  return poly::gcd(field, f, poly::sub(field, xq, x)).degree() > 0;
}

namespace {

// Largest divisor of f whose irreducible factors all divide the squarefree t.
Poly primary_part(const Field& field, const Poly& f, const Poly& t) {
  Poly part = Poly::constant(kOne);
  Poly rest = f;
  Poly g = poly::gcd(field, rest, t);
  while (g.degree() > 0) {
    part = poly::mul(field, part, g);
    rest = poly::divmod(field, rest, g).first;
    g = poly::gcd(field, rest, g);
  }
  return part;
}

// Proper factor of g, a product of at least two distinct irreducibles of
// degree d (equal-degree splitting with a seeded random source).
Poly equal_degree_factor(const Field& field, const Poly& g, unsigned d) {
  const int n = g.degree();
  const std::uint32_t q = field.order();
  std::mt19937_64 rng(0x5eed0001u);
  std::uniform_int_distribution<std::uint32_t> coeff(0, q - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<FieldElement> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = FieldElement{coeff(rng)};
    Poly a(std::move(c));
    if (a.degree() < 1) continue;
    Poly probe;
    if (field.characteristic() == 2) {
      // Absolute trace: a + a^2 + ... + a^(2^(k d - 1)) with q = 2^k.
      Poly term = a;
      probe = a;
      const unsigned steps = field.degree() * d;
      for (unsigned i = 1; i < steps; ++i) {
        term = poly::rem(field, poly::mul(field, term, term), g);
        probe = poly::add(field, probe, term);
      }
    } else {
      // a^((q^d - 1)/2) = prod_i (a^(q^i))^((q - 1)/2)
      Poly frob = a;
      probe = Poly::constant(kOne);
      for (unsigned i = 0; i < d; ++i) {
        probe = poly::rem(field, poly::mul(field, probe, poly::powmod(field, frob, (q - 1) / 2, g)), g);
        frob = poly::powmod(field, frob, q, g);
      }
      probe = poly::sub(field, probe, Poly::constant(kOne));
    }
    Poly h = poly::gcd(field, probe, g);
    if (h.degree() > 0 && h.degree() < n) return h;
  }
  throw std::runtime_error("equal_degree_factor: no split found");
}

}  // namespace

std::optional<std::pair<Poly, Poly>> coprime_split(const Field& field, const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("coprime_split: f must be monic of degree >= 1");
  if (f.degree() == 1) return std::nullopt;
  const Poly x = Poly::x();
  Poly frob = x;  // x^(q^d) mod f
  for (int d = 1; d <= f.degree(); ++d) {
    frob = poly::powmod(field, frob, field.order(), f);
    Poly g = poly::gcd(field, f, poly::sub(field, frob, x));
    if (g.degree() <= 0) continue;
    Poly factor = g;
    if (g.degree() > d) {
      // a root scan beats random splitting only for small fields
      if (d == 1 && field.order() <= 256) {
        factor = poly::sub(field, x, Poly::constant(roots(field, g).front()));
      } else {
        factor = equal_degree_factor(field, g, static_cast<unsigned>(d));
      }
    }
    Poly f1 = primary_part(field, f, factor);
    if (f1.degree() == f.degree()) return std::nullopt;
    Poly f2 = poly::divmod(field, f, f1).first;
    return std::make_pair(std::move(f1), std::move(f2));
  }
  throw std::logic_error("coprime_split: no irreducible factor found");
}

}  // namespace symalg
