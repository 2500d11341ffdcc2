#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulerk/limits.hpp"

namespace eulerk {

/// A finite group given by its full Cayley table.
///
/// Element 0 is always the identity. The constructor validates the whole
/// table: closure, identity row/column, associativity, and two-sided
/// inverses. Instances are immutable.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Builds from a row-major table; throws InvalidInputError if any group
  /// axiom fails or the identity is not at index 0.
  static FiniteGroup from_table(std::vector<int> table, std::string name);

  static FiniteGroup trivial() { return from_table({0}, "C1"); }

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const;
  bool is_abelian() const;

  /// Multiset of element orders, sorted ascending.
  std::vector<int> element_orders() const;

  const std::string& name() const { return name_; }
  FiniteGroup renamed(std::string name) const;

  const std::vector<int>& table() const { return table_; }

  /// Byte key identifying the exact table (not the isomorphism class);
  /// used by the internal caches.
  std::string table_key() const;

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;
};

/// A normal subgroup of a fixed parent, stored as a sorted element set.
struct NormalSubgroup {
  FiniteGroup parent;
  std::vector<int> elements;  // sorted, contains 0

  int index() const {
    return parent.order() / static_cast<int>(elements.size());
  }
};

/// Sylow data: one Sylow p-subgroup per prime dividing the order, plus
/// whether the group is nilpotent (every Sylow subgroup normal).
struct SylowDecomposition {
  std::map<int, FiniteGroup> sylow;  // prime -> subgroup as standalone group
  bool nilpotent = true;
};

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const std::string& name);

/// Subgroup generated by `seed` (identity is implicit).
std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& seed);

/// Every subgroup, as sorted element sets ordered by (size, elements).
/// Cached per group table.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

/// The subgroup `elements` of `g` as a standalone group (elements
/// relabeled by their sorted position).
FiniteGroup subgroup_group(const FiniteGroup& g,
                           const std::vector<int>& elements,
                           const std::string& name);

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

/// All normal subgroups ordered by (size ascending, elements lex).
/// Always contains {0} and the whole group. Cached per group table.
std::vector<NormalSubgroup> normal_subgroups(const FiniteGroup& g);

/// Quotient by a normal subgroup; cosets are labeled by their minimal
/// element in ascending order, so the identity coset is index 0.
/// Throws InvalidInputError if `n` is not a normal subgroup of `g`.
FiniteGroup quotient(const FiniteGroup& g, const NormalSubgroup& n);

SylowDecomposition sylow_decomposition(const FiniteGroup& g);

/// Prime factorization of n as (prime -> exponent).
std::map<int, int> factorize(int n);

}  // namespace eulerk
