#include "symalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace symalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::append_row(std::span<const FieldElement> r) {
  if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement s = a(i, k);
      if (s == kZero) continue;
      axpy(f, dst, s, b.row(k));
    }
  }
  return out;
}

Vector apply(const Field& f, const Matrix& m, std::span<const FieldElement> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(f, m.row(r), v);
  return out;
}

Vector apply_left(const Field& f, std::span<const FieldElement> v, const Matrix& m) {
  if (m.rows() != v.size()) throw std::invalid_argument("apply_left: dimension mismatch");
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] != kZero) axpy(f, out, v[r], m.row(r));
  }
  return out;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  std::vector<FieldElement> d(a.data().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = f.add(a.data()[i], b.data()[i]);
  return Matrix(a.rows(), a.cols(), std::move(d));
}

Matrix sub(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sub: shape mismatch");
  std::vector<FieldElement> d(a.data().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = f.sub(a.data()[i], b.data()[i]);
  return Matrix(a.rows(), a.cols(), std::move(d));
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column mismatch");
  std::vector<FieldElement> d = top.data();
  d.insert(d.end(), bottom.data().begin(), bottom.data().end());
  return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(d));
}

Vector add(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vector sub(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vector scale(const Field& f, FieldElement s, std::span<const FieldElement> v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(s, v[i]);
  return out;
}

void axpy(const Field& f, std::span<FieldElement> a, FieldElement s, std::span<const FieldElement> b) {
  if (s == kZero) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != kZero) a[i] = f.add(a[i], f.mul(s, b[i]));
  }
}

FieldElement dot(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  FieldElement acc = kZero;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != kZero && b[i] != kZero) acc = f.add(acc, f.mul(a[i], b[i]));
  }
  return acc;
}

bool is_zero(std::span<const FieldElement> v) {
  for (auto x : v) {
    if (x != kZero) return false;
  }
  return true;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = kOne;
  return v;
}

RrefResult rref(const Field& f, const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a(pr, c) == kZero) ++pr;
    if (pr == rows) continue;
    if (pr != r) {
      auto x = a.row(pr), y = a.row(r);
      std::swap_ranges(x.begin() + c, x.end(), y.begin() + c);
    }
    const FieldElement inv = f.inv(a(r, c));
    auto prow = a.row(r);
    for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const FieldElement s = a(i, c);
      if (s == kZero) continue;
      const FieldElement ns = f.neg(s);
      auto dst = a.row(i);
      for (std::size_t k = c; k < cols; ++k) {
        if (prow[k] != kZero) dst[k] = f.add(dst[k], f.mul(ns, prow[k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<FieldElement> d(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(r * cols));
  return RrefResult{Matrix(r, cols, std::move(d)), std::move(pivots), r};
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank; }

Subspace kernel(const Field& f, const Matrix& m) {
  const std::size_t n = m.cols();
  auto [reduced, pivots, rk] = rref(f, m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  std::vector<Vector> vecs;
  for (auto fc : free) {
    Vector v(n);
    v[fc] = kOne;
    for (std::size_t r = 0; r < rk; ++r) v[pivots[r]] = f.neg(reduced(r, fc));
    vecs.push_back(std::move(v));
  }
  return Subspace(f, n, vecs);
}

Subspace::Subspace(const Field& f, const Matrix& spanning) : ambient_(spanning.cols()) {
  auto res = rref(f, spanning);
  basis_ = std::move(res.reduced);
  pivots_ = std::move(res.pivots);
}

Subspace::Subspace(const Field& f, std::size_t ambient_dim, std::span<const Vector> spanning)
    : Subspace(f, Matrix::from_rows(ambient_dim, spanning)) {}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Vector Subspace::reduce(const Field& f, std::span<const FieldElement> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: ambient mismatch");
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const FieldElement s = w[pivots_[r]];
    if (s != kZero) axpy(f, w, f.neg(s), basis_.row(r));
  }
  return w;
}

bool Subspace::contains(const Field& f, std::span<const FieldElement> v) const {
  return symalg::is_zero(reduce(f, v));
}

Vector Subspace::coordinates(std::span<const FieldElement> v) const {
  Vector c(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vector Subspace::from_coordinates(const Field& f, std::span<const FieldElement> coords) const {
  return apply_left(f, coords, basis_);
}

namespace {
void require_same_ambient(const Subspace& u, const Subspace& v, const char* what) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch (" +
                                std::to_string(u.ambient_dim()) + " vs " +
                                std::to_string(v.ambient_dim()) + ")");
  }
}
}  // namespace

Subspace subspace_sum(const Field& f, const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_sum");
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  return Subspace(f, stack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Field& f, const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_intersect");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  if (u.is_full()) return v;
  if (v.is_full()) return u;
  // Solve x U = y V: kernel of the n x (r + s) system [U^T | -V^T].
  const std::size_t r = u.dim(), s = v.dim();
  Matrix system(n, r + s);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < n; ++k) system(k, i) = u.basis()(i, k);
  }
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = 0; k < n; ++k) system(k, r + j) = f.neg(v.basis()(j, k));
  }
  const Subspace sol = kernel(f, system);
  std::vector<Vector> vecs;
  vecs.reserve(sol.dim());
  for (std::size_t i = 0; i < sol.dim(); ++i) {
    auto row = sol.basis().row(i);
    vecs.push_back(apply_left(f, row.subspan(0, r), u.basis()));
  }
  return Subspace(f, n, vecs);
}

bool is_subspace(const Field& f, const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "is_subspace");
  if (u.dim() > v.dim()) return false;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (!v.contains(f, u.basis().row(i))) return false;
  }
  return true;
}

Subspace image(const Field& f, const Matrix& m, const Subspace& u) {
  std::vector<Vector> vecs;
  vecs.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) vecs.push_back(apply(f, m, u.basis().row(i)));
  return Subspace(f, m.rows(), vecs);
}

std::optional<Vector> DependencyTracker::push(std::span<const FieldElement> v) {
  if (v.size() != length_) throw std::invalid_argument("DependencyTracker: length mismatch");
  const Field& f = *field_;
  Vector w(v.begin(), v.end());
  Vector combo(count_ + 1);
  combo[count_] = kOne;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElement s = w[pivots_[r]];
    if (s == kZero) continue;
    const FieldElement ns = f.neg(s);
    axpy(f, w, ns, rows_[r]);
    axpy(f, std::span<FieldElement>(combo.data(), combos_[r].size()), ns, combos_[r]);
  }
  ++count_;
  std::size_t piv = 0;
  while (piv < length_ && w[piv] == kZero) ++piv;
  if (piv == length_) return combo;
  const FieldElement inv = f.inv(w[piv]);
  rows_.push_back(scale(f, inv, w));
  combos_.push_back(scale(f, inv, combo));
  pivots_.push_back(piv);
  return std::nullopt;
}

}  // namespace symalg
