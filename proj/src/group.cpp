#include "symalg/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "symalg/errors.hpp"

namespace symalg {

Group::Group(std::vector<std::vector<std::size_t>> table, std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InputError("group table is empty");
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[g].size() != n) throw InputError("group table row " + std::to_string(g) + " has wrong length");
  }
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t r = table_[g][h], c = table_[h][g];
      if (r >= n || c >= n) throw InputError("group table entry out of range in row/column " + std::to_string(g));
      if (row_seen[r]) throw InputError("group table row " + std::to_string(g) + " is not a permutation");
      if (col_seen[c]) throw InputError("group table column " + std::to_string(g) + " is not a permutation");
      row_seen[r] = col_seen[c] = true;
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[0][g] != g || table_[g][0] != g) throw InputError("index 0 is not a two-sided identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table_[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[ab][c] != table_[a][table_[b][c]]) {
          std::ostringstream os;
          os << "group table is not associative at (" << a << ", " << b << ", " << c << ")";
          throw InputError(os.str());
        }
      }
    }
  }
  inverse_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g][h] == 0) inverse_[g] = h;
    }
  }
  if (!labels_.empty() && labels_.size() != n) throw InputError("group labels do not match the order");
}

std::size_t Group::element_order(std::size_t g) const {
  std::size_t k = 1, x = g;
  while (x != 0) {
    x = table_[x][g];
    ++k;
  }
  return k;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (std::size_t g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
  return e;
}

bool Group::is_abelian() const {
  for (std::size_t g = 0; g < order(); ++g) {
    for (std::size_t h = g + 1; h < order(); ++h) {
      if (table_[g][h] != table_[h][g]) return false;
    }
  }
  return true;
}

Group group_from_cayley(std::vector<std::vector<std::size_t>> table, std::string name) {
  return Group(std::move(table), std::move(name));
}

Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators, std::string name,
                              std::size_t order_cap) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw InputError("generator length differs from the degree " + std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (auto x : g) {
      if (x >= degree || seen[x]) throw InputError("generator is not a permutation of 0.." + std::to_string(degree - 1));
      seen[x] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(elems[cur], g);
      if (index.count(next)) continue;
      if (elems.size() >= order_cap) {
        throw InputError("permutation group exceeds the order cap " + std::to_string(order_cap));
      }
      index.emplace(next, elems.size());
      queue.push_back(elems.size());
      elems.push_back(std::move(next));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  }
  std::vector<std::string> labels;
  for (const auto& p : elems) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]";
    labels.push_back(os.str());
  }
  return Group(std::move(table), std::move(name), std::move(labels));
}

ConjugacyData conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  ConjugacyData data;
  data.class_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (data.class_of[x] != n) continue;
    const std::size_t id = data.classes.size();
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t y = g.mul(g.mul(g.inverse(h), x), h);
      if (data.class_of[y] == n) {
        data.class_of[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    data.classes.push_back(std::move(cls));
  }
  return data;
}

unsigned splitting_degree(const Group& g, std::uint32_t p) {
  if (!is_prime(p)) throw InputError("prime " + std::to_string(p) + " is not prime");
  std::size_t m = g.exponent();
  while (m % p == 0) m /= p;
  return multiplicative_order(p, m);
}

Algebra group_algebra_only(const Group& g, std::shared_ptr<const Field> field) {
  const std::size_t n = g.order();
  std::vector<FieldElement> constants(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) constants[(a * n + b) * n + g.mul(a, b)] = kOne;
  }
  return Algebra(std::move(field), n, std::move(constants), unit_vector(n, 0));
}

SymmetrizingForm group_form(const Group& g, const Algebra& a) {
  const std::size_t n = g.order();
  Matrix gram(n, n);
  for (std::size_t x = 0; x < n; ++x) gram(x, g.inverse(x)) = kOne;
  return SymmetrizingForm(a, std::move(gram));
}

GroupAlgebra group_algebra(const Group& g, std::shared_ptr<const Field> field) {
  Algebra a = group_algebra_only(g, std::move(field));
  SymmetrizingForm form = group_form(g, a);
  return GroupAlgebra{std::move(a), std::move(form)};
}

Subspace augmentation_ideal(const Group& g, const Field& f) {
  const std::size_t n = g.order();
  std::vector<Vector> vecs;
  for (std::size_t x = 1; x < n; ++x) {
    Vector v(n);
    v[x] = kOne;
    v[0] = f.neg(kOne);
    vecs.push_back(std::move(v));
  }
  return Subspace(f, n, vecs);
}

}  // namespace symalg
