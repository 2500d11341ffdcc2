#pragma once

#include <string>
#include <vector>

#include "eulerk/group.hpp"
#include "eulerk/limits.hpp"

namespace eulerk {

/// A canonical Cayley table of the isomorphism class: two groups get the
/// same canonical table iff they are isomorphic, and the table is itself
/// a valid table of the class. Abelian groups take the digit-addition
/// table of their primary decomposition (primes ascending, prime-power
/// factors descending); non-abelian groups take the minimal table over
/// identity-fixing relabelings, compared in expanding-corner order (all
/// entries among labels {1..k} before any entry involving label k+1).
/// Cached per input table.
std::vector<int> canonical_table(const FiniteGroup& g);

/// Comparable byte key: big-endian order followed by the canonical table.
/// Keys sort by (order, canonical table), which is the total order used
/// for basis bookkeeping.
std::string canonical_key(const FiniteGroup& g);

/// Catalog spec naming the isomorphism class when one exists ("C4xC2",
/// "D4", ...); falls back to a "table:[...]" literal of the canonical
/// table, which is always parseable. Deterministic.
std::string canonical_name(const FiniteGroup& g);

}  // namespace eulerk
