#pragma once

#include <memory>
#include <random>

#include "symalg/algebra.hpp"
#include "symalg/catalog.hpp"
#include "symalg/group.hpp"

namespace testing_support {

using namespace symalg;

inline std::shared_ptr<const Field> gf(std::uint32_t p, unsigned e = 1) { return std::make_shared<const Field>(p, e); }

inline FieldElement el(const Field& f, std::int64_t n) { return f.from_int(n); }

inline Vector vec(const Field& f, std::initializer_list<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Subspace span(const Field& f, std::size_t n, std::initializer_list<Vector> vs) {
  std::vector<Vector> rows(vs);
  return Subspace(f, n, rows);
}

inline Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  Vector v(n);
  for (auto& x : v) x = FieldElement{d(rng)};
  return v;
}

inline Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vector(f, n, rng));
  return Subspace(f, n, rows);
}

// Full matrix algebra M_2 over f with basis E11, E12, E21, E22.
inline Algebra matrix_algebra_2(std::shared_ptr<const Field> f) {
  std::vector<FieldElement> c(64);
  auto idx = [](std::size_t i, std::size_t j) { return 2 * i + j; };
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t l = 0; l < 2; ++l) c[(idx(i, j) * 4 + idx(j, l)) * 4 + idx(i, l)] = kOne;
    }
  }
  Vector unit(4);
  unit[0] = unit[3] = kOne;
  return Algebra(std::move(f), 4, std::move(c), unit);
}

inline GroupAlgebra catalog_algebra(const std::string& name, std::uint32_t p, unsigned e = 1) {
  return group_algebra(make_catalog_group(name), gf(p, e));
}

}  // namespace testing_support
