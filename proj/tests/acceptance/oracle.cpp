#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

namespace {

std::int64_t md(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = md(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<Row> echelon(std::vector<Row> rows, std::int64_t p) {
  std::vector<Row> out;
  if (rows.empty()) return out;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && md(rows[piv][col], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::int64_t s = inv(rows[r][col], p);
    for (auto& x : rows[r]) x = md(x * s, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = md(rows[i][col], p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = md(rows[i][j] - f * rows[r][j], p);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank(std::vector<Row> rows, std::int64_t p) { return echelon(std::move(rows), p).size(); }

std::vector<Row> nullspace(const std::vector<Row>& rows, std::size_t n, std::int64_t p) {
  const auto e = echelon(rows, p);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : e) {
    const auto c = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](auto x) { return x != 0; }) -
                                            row.begin());
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Row> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.size(); ++i) v[pivot_of_row[i]] = md(-e[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

GroupRing::GroupRing(Table table, std::int64_t p) : table_(std::move(table)), p_(p) {}

Row GroupRing::mul(const Row& a, const Row& b) const {
  Row c(dim(), 0);
  for (std::size_t g = 0; g < dim(); ++g) {
    if (a[g] == 0) continue;
    for (std::size_t h = 0; h < dim(); ++h) {
      if (b[h] != 0) c[table_[g][h]] = (c[table_[g][h]] + a[g] * b[h]) % p_;
    }
  }
  return c;
}

Row GroupRing::element(std::size_t g) const {
  Row v(dim(), 0);
  v[g] = 1;
  return v;
}

Row GroupRing::combo(std::initializer_list<std::pair<std::int64_t, std::size_t>> terms) const {
  Row v(dim(), 0);
  for (const auto& [c, g] : terms) v[g] = md(v[g] + c, p_);
  return v;
}

Row GroupRing::sub(const Row& a, const Row& b) const {
  Row c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = md(a[i] - b[i], p_);
  return c;
}

namespace {

// Intersection dimension via dim U + dim V - dim (U + V).
std::size_t meet_dim(const std::vector<Row>& u, const std::vector<Row>& v, std::int64_t p) {
  std::vector<Row> both = u;
  both.insert(both.end(), v.begin(), v.end());
  return rank(u, p) + rank(v, p) - rank(both, p);
}

std::vector<Row> products(const GroupRing& r, const std::vector<Row>& u, const std::vector<Row>& v) {
  std::vector<Row> out;
  for (const auto& a : u) {
    for (const auto& b : v) out.push_back(r.mul(a, b));
  }
  return echelon(std::move(out), r.p());
}

}  // namespace

Invariants compute(const GroupRing& ring, const std::vector<Row>& idempotents, const std::vector<Row>& radical) {
  const std::int64_t p = ring.p();
  const std::size_t n = ring.dim();
  Invariants out;

  std::vector<std::vector<Row>> powers;
  std::vector<Row> cur = echelon(radical, p);
  while (!cur.empty()) {
    powers.push_back(cur);
    out.radical_power_dims.push_back(cur.size());
    cur = products(ring, cur, powers[0]);
  }
  out.lambda = powers.size() + 1;
  auto power = [&](std::size_t k) { return k <= powers.size() ? powers[k - 1] : std::vector<Row>{}; };

  std::vector<Row> basis;
  for (std::size_t g = 0; g < n; ++g) basis.push_back(ring.element(g));
  auto corner = [&](const Row& e, const std::vector<Row>& span, const Row& f) {
    std::vector<Row> vecs;
    for (const auto& v : span) vecs.push_back(ring.mul(ring.mul(e, v), f));
    return rank(vecs, p);
  };
  const std::size_t l = idempotents.size();
  out.cartan.assign(l, std::vector<std::int64_t>(l, 0));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      out.cartan[i][j] = static_cast<std::int64_t>(corner(idempotents[i], basis, idempotents[j]));
    }
  }

  // Center: a with a g = g a for all g.
  std::vector<Row> eqs;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Row> d;
    for (std::size_t h = 0; h < n; ++h) d.push_back(ring.sub(ring.mul(basis[h], basis[g]), ring.mul(basis[g], basis[h])));
    for (std::size_t k = 0; k < n; ++k) {
      Row eq(n, 0);
      for (std::size_t h = 0; h < n; ++h) eq[h] = d[h][k];
      eqs.push_back(std::move(eq));
    }
  }
  const auto z = nullspace(eqs, n, p);
  out.center_dim = z.size();

  for (std::size_t k = 1; k <= out.lambda; ++k) {
    const auto jk = power(k);
    std::int64_t c = 0;
    for (const auto& e : idempotents) {
      c += static_cast<std::int64_t>(corner(e, basis, e)) - static_cast<std::int64_t>(corner(e, jk, e));
    }
    out.c_seq.push_back(c);

    // Ann(J^k) = {a : a j = 0 for j in J^k}.
    std::vector<Row> ann_eqs;
    for (const auto& j : jk) {
      std::vector<Row> prod;
      for (std::size_t h = 0; h < n; ++h) prod.push_back(ring.mul(basis[h], j));
      for (std::size_t t = 0; t < n; ++t) {
        Row eq(n, 0);
        for (std::size_t h = 0; h < n; ++h) eq[h] = prod[h][t];
        ann_eqs.push_back(std::move(eq));
      }
    }
    const auto ann = nullspace(ann_eqs, n, p);
    out.socz_seq.push_back(static_cast<std::int64_t>(meet_dim(ann, z, p)));
  }
  return out;
}

std::size_t class_count(const Table& table) {
  const std::size_t n = table.size();
  std::vector<std::size_t> inverse(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == 0) inverse[g] = h;
    }
  }
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++count;
    for (std::size_t h = 0; h < n; ++h) seen[table[table[inverse[h]][x]][h]] = true;
  }
  return count;
}

Table permutation_table(const std::vector<std::vector<std::size_t>>& generators) {
  using Perm = std::vector<std::size_t>;
  const std::size_t d = generators.at(0).size();
  Perm id(d);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Perm next = compose(elems[i], g);
      if (index.emplace(next, elems.size()).second) elems.push_back(next);
    }
  }
  Table t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  }
  return t;
}

}  // namespace oracle
