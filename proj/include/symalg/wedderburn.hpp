#pragma once

#include <cstdint>
#include <vector>

#include "symalg/algebra.hpp"

namespace symalg {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Jacobson radical J with its power chain. powers[n - 1] = J^n for
/// n = 1..loewy_length, so the last entry is the zero subspace. A semisimple
/// algebra has J = 0 and Loewy length 1.
struct RadicalData {
  Subspace radical;
  std::vector<Subspace> powers;
  std::size_t loewy_length = 1;

  // J^n for any n >= 1 (zero beyond the Loewy length).
  const Subspace& power(std::size_t n) const;
};

/// Radical by the trace-form chain of Cohen, Ivanyos and Wales: over GF(p),
/// I_{-1} = A and I_i = {a in I_{i-1} : g_i(a b) = 0 for all b}, where g_i
/// is Tr(x^(p^i)) / p^i on an integer lift of the regular representation;
/// J = I_l with l = floor(log_p dim). Extension fields are handled by
/// restriction of scalars to GF(p).
Subspace radical_subspace(const Algebra& a);
RadicalData radical(const Algebra& a);

struct SemisimpleSplit {
  std::vector<Vector> central_idempotents;
  std::vector<std::size_t> component_dims;
};

/// Central primitive idempotents of a semisimple algebra, ordered by
/// component dimension and then by coordinates. Throws SplitnessError when a
/// component has a center larger than the field.
SemisimpleSplit semisimple_split(const Algebra& s, std::uint64_t seed = kDefaultSeed);

/// Idempotent e = a^(p^k), p^k >= Loewy length, congruent to a modulo J.
/// Requires a^2 - a in J.
Vector lift_idempotent(const Algebra& a, const RadicalData& rad, std::span<const FieldElement> representative);

struct IdempotentDecomposition {
  std::vector<Vector> idempotents;                 // orthogonal, primitive, sum to 1
  std::vector<std::size_t> class_of;               // class index per idempotent
  std::vector<std::vector<std::size_t>> classes;   // idempotent indices per class
  std::vector<std::size_t> representatives;        // lowest index in each class
  std::vector<std::size_t> simple_dims;            // n_i: dimension of the simple module of class i

  std::size_t class_count() const { return classes.size(); }
  const Vector& representative(std::size_t cls) const { return idempotents[representatives[cls]]; }
  // e = sum of the class representatives.
  Vector basic_idempotent(const Field& f) const;
};

IdempotentDecomposition primitive_decomposition(const Algebra& a, const RadicalData& rad,
                                                std::uint64_t seed = kDefaultSeed);

struct BlockDecomposition {
  std::vector<Vector> central_idempotents;
  std::vector<CornerAlgebra> blocks;
};

BlockDecomposition block_decomposition(const Algebra& a, const SymmetrizingForm& form,
                                       std::uint64_t seed = kDefaultSeed);

/// eBe for e the sum of one primitive idempotent per class.
CornerAlgebra basic_algebra(const Algebra& b, const SymmetrizingForm& form, const IdempotentDecomposition& dec);

}  // namespace symalg
