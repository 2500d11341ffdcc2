#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eulerk/group.hpp"

namespace eulerk {

/// Immutable expression tree for spaces built from classifying-space
/// leaves by homotopy pushouts.
///
/// Pushout(a, b, c) denotes b glued to c along a (a is the shared
/// corner). Susp, Wedge and Disjoint are sugar that desugars to Pushout:
///   susp(x)      -> pushout(x; point; point)
///   wedge(x, y)  -> pushout(point; x; y)
///   disjoint(..) -> iterated pushout over empty
class SpaceExpr {
 public:
  enum class Kind { Empty, Point, BG, Pushout, Disjoint, Susp, Wedge };

  static SpaceExpr empty();
  static SpaceExpr point();
  static SpaceExpr bg(FiniteGroup group);
  static SpaceExpr pushout(SpaceExpr corner, SpaceExpr left, SpaceExpr right);
  static SpaceExpr disjoint(std::vector<SpaceExpr> children);
  static SpaceExpr susp(SpaceExpr inner);
  static SpaceExpr wedge(SpaceExpr left, SpaceExpr right);

  Kind kind() const { return node_->kind; }
  const FiniteGroup& group() const { return node_->group; }
  const std::vector<SpaceExpr>& children() const { return node_->children; }

  /// Equivalent tree with only Empty, Point, BG and Pushout nodes.
  SpaceExpr desugared() const;

  /// Printable form; parsing it back yields an equal tree.
  std::string to_text() const;

  bool operator==(const SpaceExpr& rhs) const;
  bool operator!=(const SpaceExpr& rhs) const { return !(*this == rhs); }

 private:
  struct Node {
    Kind kind;
    FiniteGroup group;  // only for BG
    std::vector<SpaceExpr> children;
  };

  explicit SpaceExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace eulerk
