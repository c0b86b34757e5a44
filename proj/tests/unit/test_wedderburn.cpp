#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "symalg/errors.hpp"
#include "symalg/wedderburn.hpp"

using namespace symalg;
using namespace testing_support;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_decomposition(const Algebra& a, const RadicalData& rad, const IdempotentDecomposition& dec) {
  const Field& f = a.field();
  Vector total = a.zero();
  const QuotientAlgebra q(a, rad.radical);
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    const Vector& e = dec.idempotents[i];
    CHECK(is_idempotent(a, e));
    total = add(f, total, e);
    for (std::size_t j = 0; j < dec.idempotents.size(); ++j) {
      if (i != j) CHECK(is_zero(a.multiply(e, dec.idempotents[j])));
    }
    const Vector eb = q.project(e);
    CHECK(corner(q.algebra(), eb, eb).dim() == 1);
  }
  CHECK(total == a.unit());
}

}  // namespace

TEST_CASE("radical examples") {
  const auto s3_25 = catalog_algebra("sym:3", 5, 2);
  const RadicalData r1 = radical(s3_25.algebra);
  CHECK(r1.radical.is_zero());
  CHECK(r1.loewy_length == 1);

  const auto c3 = catalog_algebra("cyclic:3", 3);
  const RadicalData r2 = radical(c3.algebra);
  CHECK(r2.radical == augmentation_ideal(make_catalog_group("cyclic:3"), c3.algebra.field()));
  CHECK(r2.loewy_length == 3);
  CHECK(r2.power(2).dim() == 1);
  CHECK(r2.power(3).is_zero());
  CHECK(r2.power(7).is_zero());

  CHECK(radical(catalog_algebra("sym:3", 3).algebra).radical.dim() == 4);
}

TEST_CASE("radical of M_2 and of a truncated polynomial ring over extension fields") {
  CHECK(radical(matrix_algebra_2(gf(2))).radical.is_zero());
  CHECK(radical(matrix_algebra_2(gf(3, 2))).radical.is_zero());
  // GF(4)[C2] = GF(4)[t]/(t^2)
  const auto c2 = catalog_algebra("cyclic:2", 2, 2);
  const RadicalData r = radical(c2.algebra);
  CHECK(r.radical.dim() == 1);
  CHECK(r.loewy_length == 2);
  // GF(9)[C3]
  const auto c3 = catalog_algebra("cyclic:3", 3, 2);
  CHECK(radical(c3.algebra).radical.dim() == 2);
}

TEST_CASE("radical of an algebra not defined over the prime field") {
  // GF(4)[t]/(t^2 - w) with w the field generator; t^2 = w is a unit, so
  // this is GF(4)[s]/(s^2) with s = t + w^(1/2): radical of dimension 1.
  const auto f = gf(2, 2);
  const FieldElement w = f->generator();
  std::vector<FieldElement> c(8);
  c[(0 * 2 + 0) * 2 + 0] = kOne;
  c[(0 * 2 + 1) * 2 + 1] = kOne;
  c[(1 * 2 + 0) * 2 + 1] = kOne;
  c[(1 * 2 + 1) * 2 + 0] = w;
  const Algebra a(f, 2, c, vec(*f, {1, 0}));
  const RadicalData r = radical(a);
  REQUIRE(r.radical.dim() == 1);
  const Vector s{f->pth_root(w), kOne};
  CHECK(r.radical.contains(*f, s));

  // GF(9)[t]/(t^2 - w): separable in odd characteristic, hence semisimple
  const auto g = gf(3, 2);
  std::vector<FieldElement> d(8);
  d[0] = kOne;
  d[3] = kOne;
  d[5] = kOne;
  d[6] = g->generator();
  CHECK(radical(Algebra(g, 2, d, vec(*g, {1, 0}))).radical.is_zero());
}

TEST_CASE("radical matches the p-group and coprime oracles across the sweep") {
  for (const auto& name : sweep_groups()) {
    const Group g = make_catalog_group(name);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      CAPTURE(name);
      CAPTURE(p);
      const auto field = gf(p);
      const Algebra a = group_algebra_only(g, field);
      const Subspace j = radical_subspace(a);
      std::size_t m = g.order();
      while (m % p == 0) m /= p;
      if (g.order() % p != 0) CHECK(j.is_zero());
      if (m == 1) CHECK(j == augmentation_ideal(g, *field));
      CHECK(is_two_sided_ideal(a, j));
    }
  }
}

TEST_CASE("semisimple split examples") {
  const Algebra f = matrix_algebra_2(gf(3));
  CHECK(semisimple_split(f).component_dims == std::vector<std::size_t>{4});

  const auto s3 = catalog_algebra("sym:3", 3);
  const QuotientAlgebra q(s3.algebra, radical(s3.algebra).radical);
  const auto split = semisimple_split(q.algebra());
  CHECK(split.component_dims == std::vector<std::size_t>{1, 1});

  const auto s3_25 = catalog_algebra("sym:3", 5, 2);
  CHECK(sorted(semisimple_split(s3_25.algebra).component_dims) == std::vector<std::size_t>{1, 1, 4});
  CHECK_THROWS_AS(semisimple_split(s3.algebra), InputError);
}

TEST_CASE("non-split fields are detected") {
  // C3 over GF(2): x^2 + x + 1 has no root, so GF(2)[C3] = GF(2) x GF(4)
  const auto c3 = catalog_algebra("cyclic:3", 2);
  CHECK_THROWS_AS(semisimple_split(c3.algebra), SplitnessError);
  const auto c3_4 = catalog_algebra("cyclic:3", 2, 2);
  CHECK(semisimple_split(c3_4.algebra).component_dims == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("idempotent lifting") {
  const auto s3 = catalog_algebra("sym:3", 3);
  const Algebra& a = s3.algebra;
  const RadicalData rad = radical(a);
  CHECK(lift_idempotent(a, rad, a.unit()) == a.unit());
  CHECK(lift_idempotent(a, rad, a.zero()) == a.zero());

  const QuotientAlgebra q(a, rad.radical);
  const auto split = semisimple_split(q.algebra());
  for (const auto& c : split.central_idempotents) {
    const Vector rep = q.lift(c);
    const Vector e = lift_idempotent(a, rad, rep);
    CHECK(is_idempotent(a, e));
    CHECK(q.project(e) == c);
  }
}

TEST_CASE("primitive decomposition examples") {
  const auto c3 = catalog_algebra("cyclic:3", 3);
  const auto d1 = primitive_decomposition(c3.algebra, radical(c3.algebra));
  CHECK(d1.idempotents.size() == 1);
  CHECK(d1.class_count() == 1);
  CHECK(d1.idempotents[0] == c3.algebra.unit());

  const auto s3 = catalog_algebra("sym:3", 3);
  const RadicalData r2 = radical(s3.algebra);
  const auto d2 = primitive_decomposition(s3.algebra, r2);
  CHECK(d2.idempotents.size() == 2);
  CHECK(d2.class_count() == 2);
  check_decomposition(s3.algebra, r2, d2);

  const auto s3_25 = catalog_algebra("sym:3", 5, 2);
  const RadicalData r3 = radical(s3_25.algebra);
  const auto d3 = primitive_decomposition(s3_25.algebra, r3);
  CHECK(d3.idempotents.size() == 4);
  std::vector<std::size_t> sizes;
  for (const auto& c : d3.classes) sizes.push_back(c.size());
  CHECK(sorted(sizes) == std::vector<std::size_t>{1, 1, 2});
  CHECK(sorted(d3.simple_dims) == std::vector<std::size_t>{1, 1, 2});
  check_decomposition(s3_25.algebra, r3, d3);
}

TEST_CASE("primitive decompositions are valid across groups and seeds") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"sym:4", 2}, {"sym:4", 3}, {"alt:4", 2}, {"sl23", 3}, {"dihedral:10", 2}, {"quaternion:8", 3}}) {
    CAPTURE(name);
    const Group g = make_catalog_group(name);
    const auto ga = group_algebra(g, gf(p, splitting_degree(g, p)));
    const RadicalData rad = radical(ga.algebra);
    for (std::uint64_t seed : {kDefaultSeed, std::uint64_t{1}, std::uint64_t{99}}) {
      const auto dec = primitive_decomposition(ga.algebra, rad, seed);
      check_decomposition(ga.algebra, rad, dec);
      std::size_t sum_sq = 0;
      for (auto n : dec.simple_dims) sum_sq += n * n;
      CHECK(sum_sq == ga.algebra.dim() - rad.radical.dim());
    }
  }
}

TEST_CASE("block decomposition examples") {
  const auto v4 = catalog_algebra("elem_abelian:2:2", 2);
  CHECK(block_decomposition(v4.algebra, v4.form).blocks.size() == 1);

  const auto s3_25 = catalog_algebra("sym:3", 5, 2);
  const auto bd = block_decomposition(s3_25.algebra, s3_25.form);
  std::vector<std::size_t> dims;
  for (const auto& b : bd.blocks) dims.push_back(b.algebra().dim());
  CHECK(dims == std::vector<std::size_t>{1, 1, 4});

  const auto s3 = catalog_algebra("sym:3", 3);
  const auto one = block_decomposition(s3.algebra, s3.form);
  REQUIRE(one.blocks.size() == 1);
  CHECK(one.blocks[0].algebra().dim() == 6);
  CHECK(one.central_idempotents[0] == s3.algebra.unit());
}

TEST_CASE("center of GF(3)[S3] has no nontrivial idempotent") {
  // exhaustive search over all 27 central elements
  const auto s3 = catalog_algebra("sym:3", 3);
  const Algebra& a = s3.algebra;
  const Field& f = a.field();
  const Subspace z = center(a);
  std::size_t idempotents = 0;
  for (std::uint32_t code = 0; code < 27; ++code) {
    const Vector c{FieldElement{code % 3}, FieldElement{code / 3 % 3}, FieldElement{code / 9}};
    if (is_idempotent(a, z.from_coordinates(f, c))) ++idempotents;
  }
  CHECK(idempotents == 2);
}

TEST_CASE("block decomposition of S4 mod 3 and D10 mod 2") {
  const auto s4 = catalog_algebra("sym:4", 3);
  const auto b1 = block_decomposition(s4.algebra, s4.form);
  std::vector<std::size_t> dims;
  for (const auto& b : b1.blocks) dims.push_back(b.algebra().dim());
  // two blocks of defect 1 and two of defect zero (degree 3 characters)
  CHECK(dims == std::vector<std::size_t>{6, 9, 9});

  const auto d10 = catalog_algebra("dihedral:10", 2, 2);
  std::size_t total = 0;
  for (const auto& b : block_decomposition(d10.algebra, d10.form).blocks) total += b.algebra().dim();
  CHECK(total == 10);
}

TEST_CASE("basic algebra examples") {
  const auto s3 = catalog_algebra("sym:3", 3);
  const RadicalData rad = radical(s3.algebra);
  const auto dec = primitive_decomposition(s3.algebra, rad);
  CHECK(basic_algebra(s3.algebra, s3.form, dec).algebra().dim() == 6);

  const auto c3 = catalog_algebra("cyclic:3", 3);
  const auto d1 = primitive_decomposition(c3.algebra, radical(c3.algebra));
  CHECK(basic_algebra(c3.algebra, c3.form, d1).algebra().dim() == 3);

  const auto s3_25 = catalog_algebra("sym:3", 5, 2);
  const auto bd = block_decomposition(s3_25.algebra, s3_25.form);
  const CornerAlgebra& m2 = bd.blocks.back();
  REQUIRE(m2.algebra().dim() == 4);
  const auto d2 = primitive_decomposition(m2.algebra(), radical(m2.algebra()));
  CHECK(d2.idempotents.size() == 2);
  CHECK(d2.class_count() == 1);
  CHECK(basic_algebra(m2.algebra(), m2.form(), d2).algebra().dim() == 1);
}
