#include "symalg/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "symalg/errors.hpp"

namespace symalg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t parse_param(const std::string& name, const std::string& text) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InputError("catalog group '" + name + "': parameter '" + text + "' is not a non-negative integer");
  }
  return v;
}

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw InputError("catalog group '" + name + "': " + what);
}

using Table = std::vector<std::vector<std::size_t>>;

Table make_table(std::size_t n, auto&& mul) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(a, b);
  }
  return t;
}

Group cyclic(std::size_t n, const std::string& name) {
  return Group(make_table(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }), name);
}

Group elementary_abelian(std::size_t p, std::size_t k, const std::string& name) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    require(n <= Group::kDefaultOrderCap, name, "order exceeds " + std::to_string(Group::kDefaultOrderCap));
  }
  return Group(make_table(n,
                          [p, k](std::size_t a, std::size_t b) {
                            std::size_t r = 0, scale = 1;
                            for (std::size_t i = 0; i < k; ++i) {
                              r += ((a % p + b % p) % p) * scale;
                              a /= p;
                              b /= p;
                              scale *= p;
                            }
                            return r;
                          }),
               name);
}

// r^i s^j at index i + n j; s r s = r^-1.
Group dihedral(std::size_t n, const std::string& name) {
  return Group(make_table(2 * n,
                          [n](std::size_t a, std::size_t b) {
                            const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
                            const std::size_t r = j == 0 ? (i + k) % n : (i + n - k) % n;
                            return r + n * ((j + l) % 2);
                          }),
               name);
}

// Dicyclic group of order 4m: a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1.
Group dicyclic(std::size_t m, const std::string& name) {
  const std::size_t n = 2 * m;
  return Group(make_table(2 * n,
                          [n, m](std::size_t a, std::size_t b) {
                            const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
                            if (j == 0) return (i + k) % n + n * l;
                            if (l == 0) return (i + n - k) % n + n;
                            return (i + n - k + m) % n;
                          }),
               name);
}

Group symmetric(std::size_t n, const std::string& name) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  return group_from_permutations(std::max<std::size_t>(n, 1), gens, name);
}

Group alternating(std::size_t n, const std::string& name) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    Permutation g(n);
    std::iota(g.begin(), g.end(), 0);
    g[i] = i + 1;
    g[i + 1] = i + 2;
    g[i + 2] = i;
    gens.push_back(std::move(g));
  }
  return group_from_permutations(std::max<std::size_t>(n, 1), gens, name);
}

// SL(2, 3): 2x2 matrices over GF(3) with determinant 1, identity first.
Group sl23(const std::string& name) {
  using M = std::array<std::size_t, 4>;
  std::vector<M> elems{{1, 0, 0, 1}};
  for (std::size_t code = 0; code < 81; ++code) {
    const M m{code % 3, code / 3 % 3, code / 9 % 3, code / 27};
    if ((m[0] * m[3] + 3 * 3 - m[1] * m[2]) % 3 == 1 && m != elems[0]) elems.push_back(m);
  }
  auto mul = [](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3, (x[2] * y[0] + x[3] * y[2]) % 3,
             (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  auto index = [&elems](const M& m) {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), m) - elems.begin());
  };
  return Group(make_table(elems.size(), [&](std::size_t a, std::size_t b) { return index(mul(elems[a], elems[b])); }),
               name);
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  return {
      {"trivial", "trivial group, order 1"},
      {"cyclic:<n>", "cyclic group C_n, 1 <= n <= 64"},
      {"elem_abelian:<p>:<k>", "elementary abelian group (C_p)^k, order p^k <= 512"},
      {"dihedral:<2n>", "dihedral group of order 2n, 2 <= 2n <= 128"},
      {"quaternion:<4m>", "dicyclic group of order 4m, m >= 2 (quaternion:8 is Q8)"},
      {"sym:<n>", "symmetric group S_n, 1 <= n <= 5"},
      {"alt:<n>", "alternating group A_n, 1 <= n <= 5"},
      {"sl23", "SL(2, 3), order 24"},
  };
}

Group make_catalog_group(const std::string& name) {
  const auto parts = split(name, ':');
  const std::string& family = parts[0];
  auto params = [&](std::size_t count) {
    require(parts.size() == count + 1, name, "expected " + std::to_string(count) + " parameter(s)");
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < parts.size(); ++i) out.push_back(parse_param(name, parts[i]));
    return out;
  };
  if (family == "trivial") {
    params(0);
    return cyclic(1, name);
  }
  if (family == "cyclic") {
    const auto n = params(1)[0];
    require(n >= 1 && n <= 64, name, "n must be in 1..64");
    return cyclic(n, name);
  }
  if (family == "elem_abelian") {
    const auto v = params(2);
    require(is_prime(static_cast<std::uint32_t>(v[0])), name, "p must be prime");
    require(v[1] >= 1, name, "k must be positive");
    return elementary_abelian(v[0], v[1], name);
  }
  if (family == "dihedral") {
    const auto n = params(1)[0];
    require(n >= 2 && n % 2 == 0 && n <= 128, name, "order must be even and in 2..128");
    return dihedral(n / 2, name);
  }
  if (family == "quaternion") {
    const auto n = params(1)[0];
    require(n >= 8 && n % 4 == 0 && n <= 128, name, "order must be a multiple of 4 in 8..128");
    return dicyclic(n / 4, name);
  }
  if (family == "sym" || family == "alt") {
    const auto n = params(1)[0];
    require(n >= 1 && n <= 5, name, "n must be in 1..5");
    return family == "sym" ? symmetric(n, name) : alternating(n, name);
  }
  if (family == "sl23") {
    params(0);
    return sl23(name);
  }
  throw InputError("unknown catalog group '" + name + "' (see the catalog command)");
}

std::vector<std::string> sweep_groups(std::size_t max_order) {
  // every catalog instance up to max_order, one name per isomorphism type
  // where two families overlap (C2, V4, C3, S3 = D6, ...)
  std::vector<std::string> out{"trivial"};
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_order, 64); ++n) out.push_back("cyclic:" + std::to_string(n));
  for (std::size_t p : {2, 3, 5, 7}) {
    std::size_t order = p * p;
    for (std::size_t k = 2; order <= std::min<std::size_t>(max_order, 512); ++k, order *= p) {
      out.push_back("elem_abelian:" + std::to_string(p) + ":" + std::to_string(k));
    }
  }
  for (std::size_t n = 8; n <= std::min<std::size_t>(max_order, 128); n += 2) out.push_back("dihedral:" + std::to_string(n));
  for (std::size_t n = 8; n <= std::min<std::size_t>(max_order, 128); n += 4) out.push_back("quaternion:" + std::to_string(n));
  for (const auto& [name, order] : std::vector<std::pair<const char*, std::size_t>>{
           {"sym:3", 6}, {"alt:4", 12}, {"sym:4", 24}, {"sl23", 24}, {"alt:5", 60}, {"sym:5", 120}}) {
    if (order <= max_order) out.push_back(name);
  }
  return out;
}

}  // namespace symalg
