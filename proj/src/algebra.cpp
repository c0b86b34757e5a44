#include "symalg/algebra.hpp"

#include <sstream>

#include "symalg/errors.hpp"

namespace symalg {

Algebra::Algebra(Derived, std::shared_ptr<const Field> field, std::size_t dim, std::vector<FieldElement> constants,
                 Vector unit)
    : field_(std::move(field)), dim_(dim), constants_(std::move(constants)), unit_(std::move(unit)) {
  index_and_check_unit();
}

void Algebra::index_and_check_unit() {
  if (dim_ == 0) throw InputError("algebra dimension must be at least 1");
  if (constants_.size() != dim_ * dim_ * dim_) throw InputError("structure constant count must be dim^3");
  if (unit_.size() != dim_) throw InputError("unit vector has wrong length");
  sparse_.resize(dim_ * dim_);
  for (std::size_t ij = 0; ij < dim_ * dim_; ++ij) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const FieldElement c = constants_[ij * dim_ + k];
      if (c != kZero) sparse_[ij].push_back(Term{static_cast<std::uint32_t>(k), c});
    }
  }

  for (std::size_t i = 0; i < dim_; ++i) {
    const Vector b = basis_element(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) {
      throw ValidationError("unit law fails at basis element " + std::to_string(i));
    }
  }
}

Algebra::Algebra(std::shared_ptr<const Field> field, std::size_t dim, std::vector<FieldElement> constants,
                 Vector unit)
    : field_(std::move(field)), dim_(dim), constants_(std::move(constants)), unit_(std::move(unit)) {
  index_and_check_unit();
  const Field& f = *field_;
  // (b_i b_j) b_k = b_i (b_j b_k)
  Vector lhs(dim_), rhs(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        std::fill(lhs.begin(), lhs.end(), kZero);
        std::fill(rhs.begin(), rhs.end(), kZero);
        for (const auto& t : terms(i, j)) {
          for (const auto& u : terms(t.index, k)) lhs[u.index] = f.add(lhs[u.index], f.mul(t.coeff, u.coeff));
        }
        for (const auto& t : terms(j, k)) {
          for (const auto& u : terms(i, t.index)) rhs[u.index] = f.add(rhs[u.index], f.mul(t.coeff, u.coeff));
        }
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails at basis triple (" << i << ", " << j << ", " << k << ")";
          throw ValidationError(os.str());
        }
      }
    }
  }
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (const auto& t : terms(i, j)) out[t.index] = t.coeff;
  return out;
}

Vector Algebra::multiply(std::span<const FieldElement> x, std::span<const FieldElement> y) const {
  const Field& f = *field_;
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == kZero) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == kZero) continue;
      const FieldElement s = f.mul(x[i], y[j]);
      for (const auto& t : terms(i, j)) out[t.index] = f.add(out[t.index], f.mul(s, t.coeff));
    }
  }
  return out;
}

Matrix Algebra::left_matrix(std::span<const FieldElement> x) const {
  const Field& f = *field_;
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == kZero) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& t : terms(i, j)) m(t.index, j) = f.add(m(t.index, j), f.mul(x[i], t.coeff));
    }
  }
  return m;
}

Matrix Algebra::right_matrix(std::span<const FieldElement> x) const {
  const Field& f = *field_;
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == kZero) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& t : terms(j, i)) m(t.index, j) = f.add(m(t.index, j), f.mul(x[i], t.coeff));
    }
  }
  return m;
}

Vector Algebra::power(std::span<const FieldElement> x, std::size_t n) const {
  Vector acc = unit_;
  Vector base(x.begin(), x.end());
  while (n) {
    if (n & 1) acc = multiply(acc, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return acc;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (basis_product(i, j) != basis_product(j, i)) return false;
    }
  }
  return true;
}

SymmetrizingForm::SymmetrizingForm(const Algebra& algebra, Matrix gram) : gram_(std::move(gram)) {
  const Field& f = algebra.field();
  const std::size_t n = algebra.dim();
  if (gram_.rows() != n || gram_.cols() != n) throw ValidationError("form: Gram matrix has wrong shape");
  if (gram_ != transpose(gram_)) throw ValidationError("form: Gram matrix is not symmetric");
  if (rank(f, gram_) != n) throw ValidationError("form: Gram matrix is degenerate");
  // <b_i b_j, b_k> = <b_i, b_j b_k>, via the rows (b_i b_j)^T G and G (b_j b_k).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector left = apply_left(f, algebra.basis_product(i, j), gram_);
      for (std::size_t k = 0; k < n; ++k) {
        const FieldElement rhs = dot(f, gram_.row(i), algebra.basis_product(j, k));
        if (left[k] != rhs) {
          std::ostringstream os;
          os << "form: associativity fails at basis triple (" << i << ", " << j << ", " << k << ")";
          throw ValidationError(os.str());
        }
      }
    }
  }
}

FieldElement SymmetrizingForm::operator()(const Field& f, std::span<const FieldElement> x,
                                          std::span<const FieldElement> y) const {
  return dot(f, apply_left(f, x, gram_), y);
}

Vector multiply(const Algebra& a, std::span<const FieldElement> x, std::span<const FieldElement> y) {
  return a.multiply(x, y);
}

namespace {

// Span of the columns of op(u) applied to every basis vector of v, for each
// basis vector u; `op` builds the dim x dim matrix of an element.
template <class Op>
Subspace span_of_images(const Algebra& a, const Subspace& u, const Subspace& v, Op&& op) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Subspace acc = Subspace::zero(n);
  if (u.is_zero() || v.is_zero()) return acc;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    const Matrix m = op(u.basis().row(r));
    // Rows of V M^T are the images M v.
    Matrix imgs = multiply(f, v.basis(), transpose(m));
    acc = Subspace(f, stack(acc.basis(), imgs));
    if (acc.is_full()) break;
  }
  return acc;
}

}  // namespace

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  return span_of_images(a, u, v, [&](std::span<const FieldElement> x) { return a.left_matrix(x); });
}

Subspace commutator_subspace(const Algebra& a, const Subspace& u, const Subspace& v) {
  return span_of_images(a, u, v, [&](std::span<const FieldElement> x) {
    return sub(a.field(), a.left_matrix(x), a.right_matrix(x));
  });
}

Subspace center(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Matrix system(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector b = a.basis_element(i);
    system = stack(system, sub(f, a.left_matrix(b), a.right_matrix(b)));
  }
  return kernel(f, system);
}

Subspace annihilator(const Algebra& a, const Subspace& u) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (u.is_zero()) return Subspace::full(n);
  Matrix system(0, n);
  for (std::size_t r = 0; r < u.dim(); ++r) system = stack(system, a.left_matrix(u.basis().row(r)));
  return kernel(f, system);
}

Subspace perp(const Algebra& a, const SymmetrizingForm& form, const Subspace& u) {
  if (u.is_zero()) return Subspace::full(a.dim());
  return kernel(a.field(), multiply(a.field(), u.basis(), form.gram()));
}

bool is_left_ideal(const Algebra& a, const Subspace& i) {
  return is_subspace(a.field(), subspace_product(a, Subspace::full(a.dim()), i), i);
}

bool is_right_ideal(const Algebra& a, const Subspace& i) {
  return is_subspace(a.field(), subspace_product(a, i, Subspace::full(a.dim())), i);
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& i) { return is_left_ideal(a, i) && is_right_ideal(a, i); }

Subspace ideal_generated(const Algebra& a, const Subspace& generators) {
  const Subspace all = Subspace::full(a.dim());
  return subspace_product(a, subspace_product(a, all, generators), all);
}

std::vector<Subspace> ideal_power(const Algebra& a, const Subspace& ideal, std::size_t n) {
  if (n < 1) throw InputError("ideal_power: exponent must be at least 1");
  if (ideal.ambient_dim() != a.dim()) throw InputError("ideal_power: ambient dimension mismatch");
  if (!is_two_sided_ideal(a, ideal)) throw InputError("ideal_power: subspace is not a two-sided ideal");
  std::vector<Subspace> chain{ideal};
  while (chain.size() < n) {
    if (chain.back().is_zero()) {
      chain.push_back(chain.back());
    } else {
      chain.push_back(subspace_product(a, chain.back(), ideal));
    }
  }
  return chain;
}

bool is_idempotent(const Algebra& a, std::span<const FieldElement> x) {
  return a.multiply(x, x) == Vector(x.begin(), x.end());
}

Matrix sandwich_matrix(const Algebra& a, std::span<const FieldElement> x, std::span<const FieldElement> y) {
  return multiply(a.field(), a.left_matrix(x), a.right_matrix(y));
}

Subspace corner(const Algebra& a, std::span<const FieldElement> x, std::span<const FieldElement> y) {
  if (!is_idempotent(a, x) || !is_idempotent(a, y)) throw InputError("corner: arguments must be idempotents");
  return Subspace(a.field(), transpose(sandwich_matrix(a, x, y)));
}

Poly element_minimal_polynomial(const Algebra& a, std::span<const FieldElement> x,
                                std::span<const FieldElement> unit) {
  const Matrix right = a.right_matrix(x);
  return krylov_minimal_polynomial(a.field(), Vector(unit.begin(), unit.end()),
                                   [&](const Vector& cur) { return apply(a.field(), right, cur); });
}

Vector evaluate(const Algebra& a, const Poly& f, std::span<const FieldElement> x,
                std::span<const FieldElement> unit) {
  const Field& fld = a.field();
  const Matrix right = a.right_matrix(x);
  Vector acc(a.dim());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = apply(fld, right, acc);
    axpy(fld, acc, f[i], unit);
  }
  return acc;
}

namespace {

Algebra algebra_on_basis(const Algebra& a, const Subspace& s, std::span<const FieldElement> unit) {
  const Field& f = a.field();
  const std::size_t d = s.dim();
  if (d == 0) throw InputError("subalgebra: zero subspace");
  std::vector<FieldElement> constants(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix left = a.left_matrix(s.basis().row(i));
    for (std::size_t j = 0; j < d; ++j) {
      const Vector prod = apply(f, left, s.basis().row(j));
      if (!s.contains(f, prod)) throw InputError("subalgebra: subspace is not closed under products");
      const Vector c = s.coordinates(prod);
      std::copy(c.begin(), c.end(), constants.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
    }
  }
  if (!s.contains(f, unit)) throw InputError("subalgebra: unit outside the subspace");
  return Algebra(a.field_ptr(), d, std::move(constants), s.coordinates(unit));
}

}  // namespace

Algebra subalgebra(const Algebra& a, const Subspace& s, std::span<const FieldElement> unit) {
  return algebra_on_basis(a, s, unit);
}

namespace {

Vector checked_idempotent(const Algebra& a, Vector e) {
  if (!is_idempotent(a, e)) throw InputError("corner_algebra: element is not idempotent");
  if (is_zero(e)) throw InputError("corner_algebra: idempotent is zero");
  return e;
}

Matrix restricted_gram(const Field& f, const Matrix& embedding, const SymmetrizingForm& form) {
  return multiply(f, multiply(f, embedding, form.gram()), transpose(embedding));
}

}  // namespace

CornerAlgebra::CornerAlgebra(const Algebra& ambient, const SymmetrizingForm& form, Vector idempotent)
    : field_(ambient.field_ptr()),
      idempotent_(checked_idempotent(ambient, std::move(idempotent))),
      sandwich_(sandwich_matrix(ambient, idempotent_, idempotent_)),
      corner_(ambient.field(), transpose(sandwich_)),
      algebra_(algebra_on_basis(ambient, corner_, idempotent_)),
      form_(algebra_, restricted_gram(ambient.field(), corner_.basis(), form)) {}

Vector CornerAlgebra::to_corner(std::span<const FieldElement> ambient_vector) const {
  return corner_.coordinates(apply(*field_, sandwich_, ambient_vector));
}

Vector CornerAlgebra::to_ambient(std::span<const FieldElement> corner_vector) const {
  return corner_.from_coordinates(*field_, corner_vector);
}

Subspace CornerAlgebra::transport_in(const Subspace& ambient_subspace) const {
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < ambient_subspace.dim(); ++i) vecs.push_back(to_corner(ambient_subspace.basis().row(i)));
  return Subspace(*field_, corner_.dim(), vecs);
}

Subspace CornerAlgebra::transport_out(const Subspace& corner_subspace) const {
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < corner_subspace.dim(); ++i) vecs.push_back(to_ambient(corner_subspace.basis().row(i)));
  return Subspace(*field_, corner_.ambient_dim(), vecs);
}

namespace {

std::vector<std::size_t> non_pivots(const Subspace& s) {
  std::vector<bool> piv(s.ambient_dim(), false);
  for (auto p : s.pivots()) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
    if (!piv[c]) out.push_back(c);
  }
  return out;
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(const Algebra& ambient, Subspace ideal)
    : field_(ambient.field_ptr()),
      ideal_(std::move(ideal)),
      free_(non_pivots(ideal_)),
      algebra_(build(ambient, ideal_, free_)) {}

Algebra QuotientAlgebra::build(const Algebra& ambient, const Subspace& ideal, const std::vector<std::size_t>& free) {
  const Field& f = ambient.field();
  if (!is_two_sided_ideal(ambient, ideal)) throw InputError("quotient: subspace is not a two-sided ideal");
  const std::size_t d = free.size();
  if (d == 0) throw InputError("quotient by the whole algebra");
  std::vector<FieldElement> constants(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector prod = ideal.reduce(f, ambient.basis_product(free[i], free[j]));
      for (std::size_t k = 0; k < d; ++k) constants[(i * d + j) * d + k] = prod[free[k]];
    }
  }
  const Vector unit = ideal.reduce(f, ambient.unit());
  Vector qunit(d);
  for (std::size_t k = 0; k < d; ++k) qunit[k] = unit[free[k]];
  return Algebra(ambient.field_ptr(), d, std::move(constants), std::move(qunit));
}

Vector QuotientAlgebra::project(std::span<const FieldElement> ambient_vector) const {
  const Vector r = ideal_.reduce(*field_, ambient_vector);
  Vector out(free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) out[k] = r[free_[k]];
  return out;
}

Vector QuotientAlgebra::lift(std::span<const FieldElement> quotient_vector) const {
  Vector out(ideal_.ambient_dim());
  for (std::size_t k = 0; k < free_.size(); ++k) out[free_[k]] = quotient_vector[k];
  return out;
}

}  // namespace symalg
