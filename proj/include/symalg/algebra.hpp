#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "symalg/field.hpp"
#include "symalg/linalg.hpp"
#include "symalg/poly.hpp"

namespace symalg {

/// Finite-dimensional associative unital algebra given by structure
/// constants: b_i b_j = sum_k c(i, j, k) b_k. Associativity and the unit law
/// are checked on construction.
class Algebra {
 public:
  Algebra(std::shared_ptr<const Field> field, std::size_t dim, std::vector<FieldElement> constants,
          Vector unit);
  // Skips the associativity check; only for constants derived from an
  // algebra that was already checked.
  struct Derived {};
  Algebra(Derived, std::shared_ptr<const Field> field, std::size_t dim, std::vector<FieldElement> constants,
          Vector unit);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  Vector zero() const { return Vector(dim_); }
  Vector basis_element(std::size_t i) const { return unit_vector(dim_, i); }

  FieldElement constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  Vector basis_product(std::size_t i, std::size_t j) const;

  Vector multiply(std::span<const FieldElement> x, std::span<const FieldElement> y) const;
  // Matrix of y -> x y (column j is x b_j).
  Matrix left_matrix(std::span<const FieldElement> x) const;
  // Matrix of y -> y x (column j is b_j x).
  Matrix right_matrix(std::span<const FieldElement> x) const;
  Vector power(std::span<const FieldElement> x, std::size_t n) const;

  bool is_commutative() const;

 private:
  struct Term {
    std::uint32_t index;
    FieldElement coeff;
  };
  const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }
  void index_and_check_unit();

  std::shared_ptr<const Field> field_;
  std::size_t dim_;
  std::vector<FieldElement> constants_;
  std::vector<std::vector<Term>> sparse_;
  Vector unit_;
};

/// Nondegenerate symmetric associative bilinear form, stored by its Gram
/// matrix on the algebra basis.
class SymmetrizingForm {
 public:
  // Throws ValidationError naming the first failed property.
  SymmetrizingForm(const Algebra& algebra, Matrix gram);

  const Matrix& gram() const { return gram_; }
  FieldElement operator()(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y) const;

 private:
  Matrix gram_;
};

Vector multiply(const Algebra& a, std::span<const FieldElement> x, std::span<const FieldElement> y);

/// Span of all products u v.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);
/// [U, V], the span of all u v - v u.
Subspace commutator_subspace(const Algebra& a, const Subspace& u, const Subspace& v);
Subspace center(const Algebra& a);
/// {x : U x = 0}
Subspace annihilator(const Algebra& a, const Subspace& u);
/// {x : <U, x> = 0}
Subspace perp(const Algebra& a, const SymmetrizingForm& form, const Subspace& u);

bool is_left_ideal(const Algebra& a, const Subspace& i);
bool is_right_ideal(const Algebra& a, const Subspace& i);
bool is_two_sided_ideal(const Algebra& a, const Subspace& i);
/// Two-sided ideal generated by the given elements.
Subspace ideal_generated(const Algebra& a, const Subspace& generators);

/// The chain I, I^2, ..., I^n. Throws InputError when I is not a two-sided ideal.
std::vector<Subspace> ideal_power(const Algebra& a, const Subspace& ideal, std::size_t n);

bool is_idempotent(const Algebra& a, std::span<const FieldElement> x);
/// Image of t -> x t y for idempotents x, y.
Subspace corner(const Algebra& a, std::span<const FieldElement> x, std::span<const FieldElement> y);
/// Matrix of t -> x t y.
Matrix sandwich_matrix(const Algebra& a, std::span<const FieldElement> x, std::span<const FieldElement> y);

/// Minimal polynomial of x inside the unital subalgebra with identity `unit`
/// (x must satisfy unit x = x unit = x).
Poly element_minimal_polynomial(const Algebra& a, std::span<const FieldElement> x,
                                std::span<const FieldElement> unit);
Vector evaluate(const Algebra& a, const Poly& f, std::span<const FieldElement> x,
                std::span<const FieldElement> unit);

/// A subalgebra (closed under products, containing `unit`) as a standalone
/// algebra on the echelon basis of `s`.
Algebra subalgebra(const Algebra& a, const Subspace& s, std::span<const FieldElement> unit);

/// eAe as a symmetric algebra with unit e, together with the maps that move
/// elements and subspaces between A and eAe.
class CornerAlgebra {
 public:
  CornerAlgebra(const Algebra& ambient, const SymmetrizingForm& form, Vector idempotent);

  const Algebra& algebra() const { return algebra_; }
  const SymmetrizingForm& form() const { return form_; }
  const Subspace& corner() const { return corner_; }
  const Vector& idempotent() const { return idempotent_; }
  // Basis of eAe written in ambient coordinates, one row per basis element.
  const Matrix& embedding() const { return corner_.basis(); }

  // x -> e x e, in corner coordinates.
  Vector to_corner(std::span<const FieldElement> ambient_vector) const;
  Vector to_ambient(std::span<const FieldElement> corner_vector) const;
  Subspace transport_in(const Subspace& ambient_subspace) const;
  Subspace transport_out(const Subspace& corner_subspace) const;

 private:
  std::shared_ptr<const Field> field_;
  Vector idempotent_;
  Matrix sandwich_;
  Subspace corner_;
  Algebra algebra_;
  SymmetrizingForm form_;
};

/// Quotient A/I, with basis the coordinate vectors outside the pivot columns
/// of the echelon basis of I.
class QuotientAlgebra {
 public:
  QuotientAlgebra(const Algebra& ambient, Subspace ideal);

  const Algebra& algebra() const { return algebra_; }
  const Subspace& ideal() const { return ideal_; }
  Vector project(std::span<const FieldElement> ambient_vector) const;
  // Canonical representative (zero on the pivot columns of I).
  Vector lift(std::span<const FieldElement> quotient_vector) const;

 private:
  static Algebra build(const Algebra& ambient, const Subspace& ideal, const std::vector<std::size_t>& free);

  std::shared_ptr<const Field> field_;
  Subspace ideal_;
  std::vector<std::size_t> free_;
  Algebra algebra_;
};

}  // namespace symalg
