#pragma once

#include <functional>
#include <vector>

#include "eulerk/group.hpp"
#include "eulerk/rational.hpp"

namespace eulerk {

/// The finite poset of surjections out of a fixed base group, one node
/// per kernel. Node T >= node S iff kernel(T) is contained in kernel(S),
/// so the trivial kernel is the unique top and the whole group the unique
/// bottom. Nodes are sorted by kernel size ascending (ties: element list),
/// which places the top at index 0 and makes outputs reproducible.
class QuotientPoset {
 public:
  QuotientPoset(FiniteGroup base, std::vector<NormalSubgroup> kernels);

  const FiniteGroup& base() const { return base_; }
  int size() const { return static_cast<int>(kernels_.size()); }
  const NormalSubgroup& kernel(int node) const { return kernels_[node]; }

  /// s <= t in the quotient order (kernel(s) contains kernel(t)).
  bool leq(int s, int t) const { return leq_[s][t]; }

  int top() const { return top_; }
  int bottom() const { return bottom_; }

  /// The quotient group at a node (base / kernel).
  FiniteGroup quotient_at(int node) const;

 private:
  FiniteGroup base_;
  std::vector<NormalSubgroup> kernels_;
  std::vector<std::vector<char>> leq_;
  int top_ = 0;
  int bottom_ = 0;
};

QuotientPoset quotient_poset(const FiniteGroup& g);

/// Integer Möbius data for a QuotientPoset: mu[t][s] is defined for
/// s <= t, with mu(t,t) = 1 and all interval sums vanishing.
struct MobiusData {
  std::vector<std::vector<long long>> mu;
};

/// Splits an aggregate Möbius value across the elements covering one
/// inequality. In this model the multiplicity is always 1, so the default
/// puts all weight on the unique representative; the hook exists so the
/// inversion keeps the shape of the general construction.
using MobiusSplitter = std::function<std::vector<long long>(
    int t, int s, long long mu_bar, int multiplicity)>;

MobiusSplitter all_weight_on_unique_representative();

MobiusData mobius(const QuotientPoset& poset);
MobiusData mobius(const QuotientPoset& poset, const MobiusSplitter& split);

/// Möbius inversion: g(t) = sum over s <= t of mu(t,s) * f(s).
std::vector<Rat> invert(const QuotientPoset& poset, const MobiusData& data,
                        const std::vector<Rat>& f);

/// Number of nodes of the poset of quotient(t) that restrict to node s
/// along the surjection base -> quotient(t); 0 or 1 in this model.
int restriction_multiplicity(const QuotientPoset& poset, int t, int s);

}  // namespace eulerk
