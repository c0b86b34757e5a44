#include <set>

#include "doctest.h"
#include "support.hpp"
#include "symalg/errors.hpp"

using namespace symalg;
using namespace testing_support;

TEST_CASE("prime field GF(2) has no modulus") {
  const Field f(2, 1);
  CHECK(f.order() == 2);
  CHECK(f.modulus().empty());
  CHECK(f.name() == "GF(2)");
  CHECK(f.add(kOne, kOne) == kZero);
}

TEST_CASE("GF(9) uses x^2 + 1") {
  const Field f(3, 2);
  CHECK(f.order() == 9);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  // x^2 + 1 has no root in GF(3), so the quadratic is irreducible.
  for (std::uint32_t a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);
  // x^2 is the only monic quadratic before it in the ordering
  const FieldElement x = f.generator();
  CHECK(f.mul(x, x) == f.from_int(-1));
}

TEST_CASE("field construction rejects bad input") {
  CHECK_THROWS_AS(Field(4, 1), InputError);
  CHECK_THROWS_AS(Field(3, 0), InputError);
  CHECK_THROWS_AS(Field(2, 21), InputError);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(5, 6) == 2);
  CHECK(multiplicative_order(3, 2) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(7, 1) == 1);
  CHECK_THROWS_AS(multiplicative_order(3, 6), InputError);
}

TEST_CASE("field axioms on every element of small fields") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 1}, {2, 4}}) {
    const Field f(p, e);
    CAPTURE(f.name());
    const std::uint32_t q = f.order();
    for (std::uint32_t a = 1; a < q; ++a) {
      const FieldElement x{a};
      CHECK(f.pow(x, q - 1) == kOne);
      CHECK(f.mul(x, f.inv(x)) == kOne);
      CHECK(f.frobenius(f.pth_root(x)) == x);
      CHECK(f.add(x, f.neg(x)) == kZero);
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
    for (int t = 0; t < 200; ++t) {
      const FieldElement a{d(rng)}, b{d(rng)}, c{d(rng)};
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  const Field f(5, 2);
  const FieldElement g = f.primitive_element();
  std::set<std::uint32_t> seen;
  FieldElement x = kOne;
  for (std::uint32_t i = 0; i < f.order() - 1; ++i) {
    seen.insert(x.code);
    x = f.mul(x, g);
  }
  CHECK(seen.size() == f.order() - 1);
}

TEST_CASE("addition in large odd fields is digit-wise") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 7}, {5, 5}, {3, 12}}) {
    const Field f(p, e);  // above the add-table limit
    std::mt19937_64 rng(11 + e);
    std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
    for (int t = 0; t < 500; ++t) {
      FieldElement a{d(rng)}, b{d(rng)};
      if (t % 50 == 0) b = f.neg(a);
      if (t % 50 == 1) a = kZero;
      const auto ca = f.coeffs(a), cb = f.coeffs(b), cs = f.coeffs(f.add(a, b));
      for (std::size_t i = 0; i < ca.size(); ++i) CHECK(cs[i] == (ca[i] + cb[i]) % p);
    }
  }
}
