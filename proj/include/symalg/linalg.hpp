#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symalg/field.hpp"

namespace symalg {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix of field elements. Carries no field; every
/// arithmetic routine takes the Field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  Vector column_vector(std::size_t c) const;

  void append_row(std::span<const FieldElement> r);
  const std::vector<FieldElement>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vector apply(const Field& f, const Matrix& m, std::span<const FieldElement> v);
// Row vector times matrix.
Vector apply_left(const Field& f, std::span<const FieldElement> v, const Matrix& m);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix stack(const Matrix& top, const Matrix& bottom);

Vector add(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b);
Vector sub(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b);
Vector scale(const Field& f, FieldElement s, std::span<const FieldElement> v);
// a += s * b
void axpy(const Field& f, std::span<FieldElement> a, FieldElement s, std::span<const FieldElement> b);
FieldElement dot(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b);
bool is_zero(std::span<const FieldElement> v);
Vector unit_vector(std::size_t n, std::size_t i);

struct RrefResult {
  Matrix reduced;  // nonzero rows only
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Field& f, const Matrix& m);
std::size_t rank(const Field& f, const Matrix& m);

class Subspace;

/// {v : m v = 0}
Subspace kernel(const Field& f, const Matrix& m);

/// A subspace of F^n held by its reduced row echelon basis, so two subspaces
/// are equal exactly when their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  // Span of the rows of `spanning`.
  Subspace(const Field& f, const Matrix& spanning);
  Subspace(const Field& f, std::size_t ambient_dim, std::span<const Vector> spanning);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  // Residue of v after clearing the pivot columns; zero iff v lies in the span.
  Vector reduce(const Field& f, std::span<const FieldElement> v) const;
  bool contains(const Field& f, std::span<const FieldElement> v) const;
  // Coordinates of a member vector in the echelon basis (its pivot entries).
  Vector coordinates(std::span<const FieldElement> v) const;
  // Combination of the basis rows with the given coordinates.
  Vector from_coordinates(const Field& f, std::span<const FieldElement> coords) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Field& f, const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Field& f, const Subspace& u, const Subspace& v);
// u is contained in v
bool is_subspace(const Field& f, const Subspace& u, const Subspace& v);
// Image of a subspace under v -> m v.
Subspace image(const Field& f, const Matrix& m, const Subspace& u);

/// Incremental Gaussian elimination over a sequence of vectors that reports
/// the first linear dependency as coefficients on the sequence so far.
class DependencyTracker {
 public:
  DependencyTracker(const Field& f, std::size_t length) : field_(&f), length_(length) {}

  // Adds the next vector. Returns coefficients c_0..c_k with
  // sum c_i v_i = 0 and c_k = 1 when v_k depends on v_0..v_{k-1}.
  std::optional<Vector> push(std::span<const FieldElement> v);
  std::size_t size() const { return count_; }

 private:
  const Field* field_;
  std::size_t length_;
  std::size_t count_ = 0;
  std::vector<Vector> rows_;    // reduced vectors
  std::vector<Vector> combos_;  // combination of the input sequence per row
  std::vector<std::size_t> pivots_;
};

}  // namespace symalg
