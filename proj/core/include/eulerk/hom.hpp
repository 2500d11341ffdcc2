#pragma once

#include <vector>

#include "eulerk/group.hpp"
#include "eulerk/limits.hpp"

namespace eulerk {

/// A homomorphism between two fixed groups, as the image of every source
/// element. images[0] == 0 and images respect both Cayley tables.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> images;

  bool is_injective() const;
};

/// Greedy generating set: repeatedly adjoin the smallest element outside
/// the subgroup generated so far. Deterministic; empty for the trivial
/// group.
std::vector<int> greedy_generators(const FiniteGroup& g);

/// Every homomorphism source -> target, each exactly once, sorted by the
/// image vector. Search is over generator images with order-divisibility
/// filtering and consistency propagation.
///
/// Throws LimitError when either order exceeds limits.max_hom_order or
/// the projected generator-image space exceeds limits.max_hom_search.
std::vector<GroupHom> enumerate_homs(const FiniteGroup& source,
                                     const FiniteGroup& target,
                                     const Limits& limits = Limits::defaults());

/// Homomorphisms up to conjugation in the target: the number of orbits of
/// enumerate_homs under postcomposition with inner automorphisms.
/// Cached per pair of tables.
long long rep_count(const FiniteGroup& source, const FiniteGroup& target,
                    const Limits& limits = Limits::defaults());

/// Conjugacy classes of injective homomorphisms source -> target.
long long mono_rep_count(const FiniteGroup& source, const FiniteGroup& target,
                         const Limits& limits = Limits::defaults());

/// Brute-force isomorphism test: element-order-multiset prefilter, then
/// generator-image search for a bijective homomorphism.
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                   const Limits& limits = Limits::defaults());

}  // namespace eulerk
