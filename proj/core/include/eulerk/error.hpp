#pragma once

#include <stdexcept>
#include <string>

namespace eulerk {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (space expressions, group specs, table literals).
/// Positions are 1-based; column 0 means "unknown".
struct ParseError : Error {
  int line = 1;
  int column = 0;
  ParseError(const std::string& msg, int line_ = 1, int column_ = 0)
      : Error(column_ > 0 ? "parse error at " + std::to_string(line_) + ":" +
                                std::to_string(column_) + ": " + msg
                          : "parse error: " + msg),
        line(line_),
        column(column_) {}
};

/// A configured resource cap was exceeded (group order, hom search size).
struct LimitError : Error {
  using Error::Error;
};

/// Structurally invalid input: bad Cayley table, subgroup that is not
/// normal, basis prescriptions out of order, and similar.
struct InvalidInputError : Error {
  using Error::Error;
};

/// A basis value was required but not prescribed.
struct MissingValueError : Error {
  using Error::Error;
};

/// A leaf group is not nilpotent; per-prime evaluation is undefined for it.
struct NonNilpotentError : Error {
  using Error::Error;
};

}  // namespace eulerk
