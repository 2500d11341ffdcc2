#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerk/group.hpp"
#include "eulerk/rational.hpp"

namespace eulerk {

/// A free generator of the class group: either the point class Star, or
/// the class of B(G) for a nontrivial p-group G taken up to isomorphism.
/// Elements compare by the total order used everywhere in the library:
/// Star first, then group order ascending with canonical-key tiebreak.
class BasisElement {
 public:
  static BasisElement star();

  /// Throws InvalidInputError unless |group| is a positive power of a
  /// single prime and greater than 1. Isomorphic groups collide.
  static BasisElement p_group(const FiniteGroup& group);

  bool is_star() const { return star_; }
  int prime() const { return prime_; }
  int group_order() const { return star_ ? 1 : group_.order(); }
  const FiniteGroup& group() const { return group_; }
  const std::string& key() const { return key_; }

  /// Canonical catalog spec ("C2", "C4xC2", ...) or "*" for Star.
  const std::string& display_name() const { return name_; }

  bool operator==(const BasisElement& rhs) const {
    return star_ == rhs.star_ && key_ == rhs.key_;
  }
  bool operator!=(const BasisElement& rhs) const { return !(*this == rhs); }
  bool operator<(const BasisElement& rhs) const {
    if (star_ != rhs.star_) return star_;
    if (group_order() != rhs.group_order()) {
      return group_order() < rhs.group_order();
    }
    return key_ < rhs.key_;
  }

 private:
  bool star_ = true;
  int prime_ = 0;
  FiniteGroup group_;
  std::string key_;   // canonical key; empty for Star
  std::string name_;  // canonical display name; "*" for Star
};

/// An ordered list of prescribed basis values, the input of the
/// coefficient solver. validate() enforces the total order: Star (if
/// present) first, then strictly ascending elements, no duplicates.
struct BasisFunction {
  std::vector<std::pair<BasisElement, Rat>> entries;

  void validate() const;  // throws InvalidInputError on ordering violations
};

/// A value assignment on basis elements, possibly rule-backed so that
/// every element has a value (a finite list may leave gaps).
class BasisAssignment {
 public:
  /// Star -> 1 and [BG] -> 1/|G|: the homotopy-cardinality values.
  static BasisAssignment baez_dolan();

  /// Every element -> 1: the values of the rational Euler characteristic.
  static BasisAssignment constant_one();

  /// Finite prescriptions; elements outside the list have no value.
  static BasisAssignment from_values(
      std::vector<std::pair<BasisElement, Rat>> values);

  /// Deterministic pseudo-random values derived from the canonical key;
  /// used by the verification suites.
  static BasisAssignment seeded(uint64_t seed);

  std::optional<Rat> value(const BasisElement& element) const;

  /// Value or MissingValueError naming the element.
  Rat require(const BasisElement& element) const;

  /// f(Star); MissingValueError if absent.
  Rat point_value() const;

  const std::string& description() const { return description_; }

 private:
  enum class Kind { BaezDolan, ConstantOne, Finite, Seeded };
  Kind kind_ = Kind::ConstantOne;
  std::map<std::string, Rat> values_;  // key "*" for Star
  uint64_t seed_ = 0;
  std::string description_;
};

}  // namespace eulerk
