#pragma once

#include <string_view>

#include "eulerk/limits.hpp"
#include "eulerk/space.hpp"

namespace eulerk {

/// Parses the space-expression DSL:
///
///   expr := "empty" | "point" | "B(" groupspec ")"
///         | "pushout(" expr ";" expr ";" expr ")"
///         | "disjoint(" expr {"," expr} ")"
///         | "susp(" expr ")"
///         | "wedge(" expr "," expr ")"
///
/// Whitespace-insensitive, case-sensitive keywords. Errors carry
/// line/column positions.
SpaceExpr parse_space(std::string_view text,
                      const Limits& limits = Limits::defaults());

}  // namespace eulerk
