#include "symalg/wedderburn.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "symalg/errors.hpp"

namespace symalg {

const Subspace& RadicalData::power(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("RadicalData::power: n must be at least 1");
  return powers[std::min(n, powers.size()) - 1];
}

namespace {

// A over GF(p^e) as an algebra over GF(p); basis element (i, s) is w^s b_i at
// index i e + s, w the field generator.
Algebra restrict_scalars(const Algebra& a, std::shared_ptr<const Field> prime) {
  const Field& f = a.field();
  const std::size_t n = a.dim(), e = f.degree(), big = n * e;
  std::vector<FieldElement> wpow(2 * e);
  wpow[0] = kOne;
  for (std::size_t s = 1; s < wpow.size(); ++s) wpow[s] = f.mul(wpow[s - 1], f.generator());
  std::vector<FieldElement> constants(big * big * big);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (prod[k] == kZero) continue;
        for (std::size_t s = 0; s < e; ++s) {
          for (std::size_t t = 0; t < e; ++t) {
            const auto digits = f.coeffs(f.mul(wpow[s + t], prod[k]));
            const std::size_t row = ((i * e + s) * big + (j * e + t)) * big;
            for (std::size_t r = 0; r < e; ++r) constants[row + k * e + r] = FieldElement{digits[r]};
          }
        }
      }
    }
  }
  const Vector& unit = a.unit();
  Vector punit(big);
  for (std::size_t k = 0; k < n; ++k) {
    const auto digits = f.coeffs(unit[k]);
    for (std::size_t r = 0; r < e; ++r) punit[k * e + r] = FieldElement{digits[r]};
  }
  return Algebra(Algebra::Derived{}, std::move(prime), big, std::move(constants), std::move(punit));
}

std::optional<Algebra> prime_field_form(const Algebra& a, std::shared_ptr<const Field> prime) {
  const std::uint32_t p = prime->characteristic();
  const std::size_t n = a.dim();
  std::vector<FieldElement> constants(n * n * n);
  for (std::size_t i = 0; i < constants.size(); ++i) {
    const FieldElement c = a.constant(i / (n * n), i / n % n, i % n);
    if (c.code >= p) return std::nullopt;
    constants[i] = c;
  }
  for (const FieldElement c : a.unit()) {
    if (c.code >= p) return std::nullopt;
  }
  return Algebra(Algebra::Derived{}, std::move(prime), n, std::move(constants), a.unit());
}

using IntMatrix = std::vector<std::uint64_t>;

IntMatrix int_multiply(const IntMatrix& x, const IntMatrix& y, std::size_t n, std::uint64_t mod) {
  IntMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t s = x[i * n + k];
      if (s == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += s * y[k * n + j];
    }
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] %= mod;
  }
  return out;
}

// g_i(x) = (Tr(x~^(p^i)) mod p^(i+1)) / p^i for a GF(p)-matrix x.
FieldElement trace_functional(const Matrix& m, std::uint32_t p, unsigned level) {
  const std::size_t n = m.rows();
  std::uint64_t pi = 1;
  for (unsigned k = 0; k < level; ++k) pi *= p;
  const std::uint64_t mod = pi * p;
  IntMatrix x(n * n);
  for (std::size_t i = 0; i < n * n; ++i) x[i] = m.data()[i].code;
  for (unsigned k = 0; k < level; ++k) {
    // x <- x^p
    IntMatrix acc = x;
    for (std::uint32_t r = 1; r < p; ++r) acc = int_multiply(acc, x, n, mod);
    x = std::move(acc);
  }
  std::uint64_t tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr = (tr + x[i * n + i]) % mod;
  if (tr % pi != 0) throw ValidationError("radical: trace functional not divisible by p^i");
  return FieldElement{static_cast<std::uint32_t>(tr / pi)};
}

Subspace prime_field_radical(const Algebra& a) {
  const Field& f = a.field();
  const std::uint32_t p = f.characteristic();
  const std::size_t n = a.dim();
  unsigned levels = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++levels;
  Subspace ideal = Subspace::full(n);
  for (unsigned level = 0; level <= levels && !ideal.is_zero(); ++level) {
    const std::size_t r = ideal.dim();
    std::vector<Matrix> lefts;
    Vector phi(r);
    for (std::size_t j = 0; j < r; ++j) {
      lefts.push_back(a.left_matrix(ideal.basis().row(j)));
      phi[j] = trace_functional(lefts.back(), p, level);
    }
    // system(k, j) = g(u_j b_k), using linearity of g on the current ideal.
    Matrix system(n, r);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector prod = lefts[j].column_vector(k);
        system(k, j) = dot(f, ideal.coordinates(prod), phi);
      }
    }
    const Subspace sol = kernel(f, system);
    std::vector<Vector> vecs;
    for (std::size_t i = 0; i < sol.dim(); ++i) vecs.push_back(ideal.from_coordinates(f, sol.basis().row(i)));
    ideal = Subspace(f, n, vecs);
  }
  return ideal;
}

}  // namespace

Subspace radical_subspace(const Algebra& a) {
  const Field& f = a.field();
  if (f.degree() == 1) return prime_field_radical(a);
  auto prime = std::make_shared<const Field>(f.characteristic(), 1);
  const std::size_t n = a.dim();
  // Prime-field element codes are 0..p-1. If A is defined over GF(p) the
  // radical commutes with the scalar extension (finite fields are perfect).
  if (auto defined = prime_field_form(a, prime)) {
    const Subspace rad = prime_field_radical(*defined);
    std::vector<Vector> vecs;
    for (std::size_t i = 0; i < rad.dim(); ++i) vecs.push_back(rad.basis().row_vector(i));
    return Subspace(f, n, vecs);
  }
  const Algebra restricted = restrict_scalars(a, prime);
  const Subspace rad = prime_field_radical(restricted);
  const std::size_t e = f.degree();
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < rad.dim(); ++i) {
    Vector v(a.dim());
    std::vector<std::uint32_t> digits(e);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      for (std::size_t r = 0; r < e; ++r) digits[r] = rad.basis()(i, k * e + r).code;
      v[k] = f.element(digits);
    }
    vecs.push_back(std::move(v));
  }
  Subspace out(f, a.dim(), vecs);
  if (out.dim() * e != rad.dim()) throw ValidationError("radical: restricted radical is not a GF(q)-subspace");
  return out;
}

RadicalData radical(const Algebra& a) {
  RadicalData data;
  data.radical = radical_subspace(a);
  if (data.radical.is_zero()) {
    data.powers = {data.radical};
    data.loewy_length = 1;
    return data;
  }
  if (!is_two_sided_ideal(a, data.radical)) throw ValidationError("radical: result is not a two-sided ideal");
  data.powers = {data.radical};
  while (!data.powers.back().is_zero()) {
    if (data.powers.size() > a.dim() + 1) throw ValidationError("radical: result is not nilpotent");
    data.powers.push_back(subspace_product(a, data.powers.back(), data.radical));
  }
  data.loewy_length = data.powers.size();
  return data;
}

namespace {

bool vector_less(const Vector& x, const Vector& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

Vector random_combination(const Algebra& a, const Matrix& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, a.field().order() - 1);
  Vector c(basis.rows());
  for (auto& x : c) x = FieldElement{coeff(rng)};
  return apply_left(a.field(), c, basis);
}

// Candidate elements of the span of `basis`: seeded random combinations first,
// then each basis vector, pairwise sums and pairwise products.
class CandidateStream {
 public:
  CandidateStream(const Algebra& a, Matrix basis, std::uint64_t seed)
      : a_(a), basis_(std::move(basis)), rng_(seed) {}

  std::optional<Vector> next() {
    const std::size_t d = basis_.rows();
    if (step_ < kRandomTries) {
      ++step_;
      return random_combination(a_, basis_, rng_);
    }
    std::size_t k = step_++ - kRandomTries;
    if (k < d) return basis_.row_vector(k);
    k -= d;
    if (k < d * d) {
      const std::size_t i = k / d, j = k % d;
      return add(a_.field(), basis_.row(i), basis_.row(j));
    }
    k -= d * d;
    if (k < d * d) {
      const std::size_t i = k / d, j = k % d;
      return a_.multiply(basis_.row(i), basis_.row(j));
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kRandomTries = 64;
  const Algebra& a_;
  Matrix basis_;
  std::mt19937_64 rng_;
  std::size_t step_ = 0;
};

// Splits the idempotent f into two nonzero orthogonal idempotents using an
// element x of fAf whose minimal polynomial (relative to f) factors into
// coprime parts.
std::optional<std::pair<Vector, Vector>> split_with(const Algebra& a, const Vector& f, const Vector& x,
                                                    bool commutative_semisimple) {
  const Field& fld = a.field();
  const Poly mu = element_minimal_polynomial(a, x, f);
  if (mu.degree() <= 1) return std::nullopt;
  auto parts = coprime_split(fld, mu);
  if (!parts) {
    // In a commutative semisimple algebra an element with irreducible minimal
    // polynomial of degree > 1 generates an extension field inside every
    // component, so the component is not split.
    if (commutative_semisimple && !has_root(fld, mu)) {
      throw SplitnessError("center component contains a proper extension of " + fld.name() +
                           " (minimal polynomial " + mu.to_string(fld) + ")");
    }
    return std::nullopt;
  }
  const auto eg = poly::extended_gcd(fld, parts->first, parts->second);
  // t f2 = 1 mod f1 and 0 mod f2
  const Vector e1 = evaluate(a, poly::mul(fld, eg.t, parts->second), x, f);
  Vector e2 = sub(fld, f, e1);
  if (is_zero(e1) || is_zero(e2) || !is_idempotent(a, e1)) {
    throw ValidationError("idempotent splitting produced a degenerate pair");
  }
  return std::make_pair(e1, std::move(e2));
}

// Splits f inside the subspace spanned by `pool` (elements of fAf are formed
// as f p f). Returns nullopt when no candidate splits.
std::optional<std::pair<Vector, Vector>> split_idempotent(const Algebra& a, const Vector& f, const Matrix& pool,
                                                          bool commutative_semisimple, std::uint64_t seed) {
  const Matrix sandwich = sandwich_matrix(a, f, f);
  CandidateStream stream(a, pool, seed);
  while (auto cand = stream.next()) {
    const Vector x = apply(a.field(), sandwich, *cand);
    if (is_zero(x)) continue;
    if (auto pair = split_with(a, f, x, commutative_semisimple)) return pair;
  }
  return std::nullopt;
}

void sort_idempotents(std::vector<Vector>& ids, std::vector<std::size_t>& dims) {
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (dims[x] != dims[y]) return dims[x] < dims[y];
    return vector_less(ids[x], ids[y]);
  });
  std::vector<Vector> ids2;
  std::vector<std::size_t> dims2;
  for (auto i : order) {
    ids2.push_back(std::move(ids[i]));
    dims2.push_back(dims[i]);
  }
  ids = std::move(ids2);
  dims = std::move(dims2);
}

// Lifts orthogonal idempotents of A/J summing to 1 to orthogonal idempotents
// of A summing to 1, each step working inside (1 - s)A(1 - s) for s the sum
// of the lifts so far.
std::vector<Vector> lift_family(const Algebra& a, const RadicalData& rad, const QuotientAlgebra& q,
                                const std::vector<Vector>& family) {
  const Field& f = a.field();
  std::vector<Vector> out;
  Vector sum = a.zero();
  for (std::size_t t = 0; t + 1 < family.size(); ++t) {
    const Vector comp = sub(f, a.unit(), sum);
    const Vector rep = q.lift(family[t]);
    const Vector inside = a.multiply(a.multiply(comp, rep), comp);
    Vector e = lift_idempotent(a, rad, inside);
    sum = add(f, sum, e);
    out.push_back(std::move(e));
  }
  if (!family.empty()) out.push_back(sub(f, a.unit(), sum));
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (!is_idempotent(a, out[t])) throw ValidationError("lifted element is not idempotent");
    if (q.project(out[t]) != family[t]) throw ValidationError("lifted idempotent has the wrong image mod J");
  }
  return out;
}

}  // namespace

SemisimpleSplit semisimple_split(const Algebra& s, std::uint64_t seed) {
  const Field& f = s.field();
  if (!radical_subspace(s).is_zero()) throw InputError("semisimple_split: algebra has a nonzero radical");
  const Subspace z = center(s);
  std::vector<Vector> done, work{s.unit()};
  std::uint64_t round = 0;
  while (!work.empty()) {
    Vector c = std::move(work.back());
    work.pop_back();
    // c Z
    const Matrix left = s.left_matrix(c);
    std::vector<Vector> cz;
    for (std::size_t i = 0; i < z.dim(); ++i) cz.push_back(apply(f, left, z.basis().row(i)));
    const Subspace cz_span(f, s.dim(), cz);
    if (cz_span.dim() <= 1) {
      done.push_back(std::move(c));
      continue;
    }
    auto pair = split_idempotent(s, c, cz_span.basis(), true, seed + round++);
    if (!pair) {
      throw SplitnessError("semisimple_split: could not split a component whose center has dimension " +
                           std::to_string(cz_span.dim()));
    }
    work.push_back(std::move(pair->first));
    work.push_back(std::move(pair->second));
  }
  if (done.size() != z.dim()) {
    throw ValidationError("semisimple_split: component count differs from dim Z (input not semisimple?)");
  }
  std::vector<std::size_t> dims;
  for (const auto& c : done) {
    if (!z.contains(f, c)) {
      throw ValidationError("semisimple_split: idempotent is not central");
    }
    dims.push_back(Subspace(f, transpose(s.left_matrix(c))).dim());
  }
  sort_idempotents(done, dims);
  return SemisimpleSplit{std::move(done), std::move(dims)};
}

Vector lift_idempotent(const Algebra& a, const RadicalData& rad, std::span<const FieldElement> representative) {
  const Field& f = a.field();
  Vector x(representative.begin(), representative.end());
  const Vector defect = sub(f, a.multiply(x, x), x);
  if (!rad.radical.contains(f, defect)) throw InputError("lift_idempotent: element is not idempotent modulo J");
  std::uint64_t pk = 1;
  while (pk < rad.loewy_length) {
    x = a.power(x, f.characteristic());
    pk *= f.characteristic();
  }
  if (!is_idempotent(a, x)) throw ValidationError("lift_idempotent: p-power iteration did not converge");
  return x;
}

Vector IdempotentDecomposition::basic_idempotent(const Field& f) const {
  Vector e(idempotents.empty() ? 0 : idempotents.front().size());
  for (auto r : representatives) e = add(f, e, idempotents[r]);
  return e;
}

IdempotentDecomposition primitive_decomposition(const Algebra& a, const RadicalData& rad, std::uint64_t seed) {
  const Field& f = a.field();
  const QuotientAlgebra q(a, rad.radical);
  const Algebra& s = q.algebra();
  const SemisimpleSplit ss = semisimple_split(s, seed);

  std::vector<Vector> bar;
  std::vector<std::size_t> component;
  IdempotentDecomposition dec;
  std::uint64_t round = 0;
  for (std::size_t k = 0; k < ss.central_idempotents.size(); ++k) {
    const std::size_t d = ss.component_dims[k];
    std::size_t n = 1;
    while (n * n < d) ++n;
    if (n * n != d) {
      throw SplitnessError("simple component of dimension " + std::to_string(d) + " is not a full matrix algebra");
    }
    std::vector<Vector> prim, work{ss.central_idempotents[k]};
    while (!work.empty()) {
      Vector g = std::move(work.back());
      work.pop_back();
      const Subspace gsg = corner(s, g, g);
      if (gsg.dim() == 1) {
        prim.push_back(std::move(g));
        continue;
      }
      auto pair = split_idempotent(s, g, gsg.basis(), false, seed + 7919 * ++round);
      if (!pair) throw SplitnessError("primitive_decomposition: splitting stagnated in a corner of dimension " +
                                      std::to_string(gsg.dim()));
      work.push_back(std::move(pair->second));
      work.push_back(std::move(pair->first));
    }
    if (prim.size() != n) {
      throw ValidationError("primitive_decomposition: found " + std::to_string(prim.size()) +
                            " primitive idempotents in a component of degree " + std::to_string(n));
    }
    std::sort(prim.begin(), prim.end(), vector_less);
    dec.classes.emplace_back();
    dec.representatives.push_back(bar.size());
    dec.simple_dims.push_back(n);
    for (auto& g : prim) {
      dec.classes.back().push_back(bar.size());
      dec.class_of.push_back(k);
      bar.push_back(std::move(g));
    }
  }

  dec.idempotents = lift_family(a, rad, q, bar);
  Vector total = a.zero();
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    total = add(f, total, dec.idempotents[i]);
    for (std::size_t j = 0; j < dec.idempotents.size(); ++j) {
      if (i != j && !is_zero(a.multiply(dec.idempotents[i], dec.idempotents[j]))) {
        throw ValidationError("primitive_decomposition: idempotents are not orthogonal");
      }
    }
  }
  if (total != a.unit()) throw ValidationError("primitive_decomposition: idempotents do not sum to 1");
  return dec;
}

BlockDecomposition block_decomposition(const Algebra& a, const SymmetrizingForm& form, std::uint64_t seed) {
  const Field& f = a.field();
  const Subspace z = center(a);
  const Algebra zalg = subalgebra(a, z, a.unit());
  const RadicalData zrad = radical(zalg);
  const QuotientAlgebra zq(zalg, zrad.radical);
  const SemisimpleSplit ss = semisimple_split(zq.algebra(), seed);
  for (auto d : ss.component_dims) {
    if (d != 1) throw SplitnessError("center modulo its radical is not split");
  }
  const std::vector<Vector> lifted = lift_family(zalg, zrad, zq, ss.central_idempotents);
  std::vector<Vector> ids;
  std::vector<std::size_t> dims;
  for (const auto& e : lifted) {
    ids.push_back(z.from_coordinates(f, e));
    dims.push_back(Subspace(f, transpose(a.left_matrix(ids.back()))).dim());
  }
  sort_idempotents(ids, dims);
  BlockDecomposition out;
  for (auto& e : ids) {
    out.blocks.emplace_back(a, form, e);
    out.central_idempotents.push_back(std::move(e));
  }
  return out;
}

CornerAlgebra basic_algebra(const Algebra& b, const SymmetrizingForm& form, const IdempotentDecomposition& dec) {
  return CornerAlgebra(b, form, dec.basic_idempotent(b.field()));
}

}  // namespace symalg
