#pragma once

#include <string>
#include <string_view>

#include "eulerk/group.hpp"
#include "eulerk/limits.hpp"

namespace eulerk {

/// Builds a group from a catalog spec string.
///
/// Grammar (ASCII, whitespace ignored):
///   atom    := "C" n | "D" n | "Q8" | "S" n (n <= 4) | "table:[" ints "]"
///   spec    := atom { "x" atom }          (left-associative product)
/// "D" n is the dihedral group of order 2n; "table:[...]" takes a
/// row-major Cayley table with the identity at index 0.
///
/// Construction is deterministic: the same spec yields the identical
/// table. Throws ParseError on malformed specs and LimitError when the
/// resulting order exceeds limits.max_order.
FiniteGroup build_catalog_group(std::string_view spec,
                                const Limits& limits = Limits::defaults());

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n
FiniteGroup quaternion_group();      // Q8
FiniteGroup symmetric_group(int n);  // n <= 4

}  // namespace eulerk
