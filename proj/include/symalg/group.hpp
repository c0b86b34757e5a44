#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "symalg/algebra.hpp"
#include "symalg/field.hpp"

namespace symalg {

using Permutation = std::vector<std::size_t>;

/// Finite group by its Cayley table; index 0 is the identity.
class Group {
 public:
  static constexpr std::size_t kDefaultOrderCap = 512;

  // Validates the Latin-square property, the identity at index 0 and
  // associativity. Throws InputError.
  explicit Group(std::vector<std::vector<std::size_t>> table, std::string name = "",
                 std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t element_order(std::size_t g) const;
  std::size_t exponent() const;
  bool is_abelian() const;

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> inverse_;
};

Group group_from_cayley(std::vector<std::vector<std::size_t>> table, std::string name = "");

/// Closure of the generators under composition, elements numbered in
/// breadth-first discovery order from the identity. Product convention:
/// (g h)(i) = h(g(i)), i.e. apply g first.
Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators, std::string name = "",
                              std::size_t order_cap = Group::kDefaultOrderCap);

struct ConjugacyData {
  std::vector<std::vector<std::size_t>> classes;  // sorted by smallest member
  std::vector<std::size_t> class_of;

  std::size_t count() const { return classes.size(); }
};

ConjugacyData conjugacy_classes(const Group& g);

/// e = order of p modulo the p'-part of exp(G); GF(p^e) contains the needed
/// roots of unity to split FG.
unsigned splitting_degree(const Group& g, std::uint32_t p);

/// FG with basis the group elements and its standard symmetrizing form.
struct GroupAlgebra {
  Algebra algebra;
  SymmetrizingForm form;
};

Algebra group_algebra_only(const Group& g, std::shared_ptr<const Field> field);
/// Gram matrix with <g, h> = 1 iff g h = 1.
SymmetrizingForm group_form(const Group& g, const Algebra& a);
GroupAlgebra group_algebra(const Group& g, std::shared_ptr<const Field> field);

/// Augmentation ideal: span of g - 1.
Subspace augmentation_ideal(const Group& g, const Field& f);

}  // namespace symalg
