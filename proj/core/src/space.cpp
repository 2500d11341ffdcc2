#include "eulerk/space.hpp"

#include "eulerk/error.hpp"

namespace eulerk {

SpaceExpr SpaceExpr::empty() {
  return SpaceExpr(std::make_shared<Node>(Node{Kind::Empty, {}, {}}));
}

SpaceExpr SpaceExpr::point() {
  return SpaceExpr(std::make_shared<Node>(Node{Kind::Point, {}, {}}));
}

SpaceExpr SpaceExpr::bg(FiniteGroup group) {
  return SpaceExpr(
      std::make_shared<Node>(Node{Kind::BG, std::move(group), {}}));
}

SpaceExpr SpaceExpr::pushout(SpaceExpr corner, SpaceExpr left,
                             SpaceExpr right) {
  return SpaceExpr(std::make_shared<Node>(Node{
      Kind::Pushout,
      {},
      {std::move(corner), std::move(left), std::move(right)}}));
}

SpaceExpr SpaceExpr::disjoint(std::vector<SpaceExpr> children) {
  if (children.empty()) {
    throw InvalidInputError("disjoint needs at least one child");
  }
  return SpaceExpr(
      std::make_shared<Node>(Node{Kind::Disjoint, {}, std::move(children)}));
}

SpaceExpr SpaceExpr::susp(SpaceExpr inner) {
  return SpaceExpr(
      std::make_shared<Node>(Node{Kind::Susp, {}, {std::move(inner)}}));
}

SpaceExpr SpaceExpr::wedge(SpaceExpr left, SpaceExpr right) {
  return SpaceExpr(std::make_shared<Node>(
      Node{Kind::Wedge, {}, {std::move(left), std::move(right)}}));
}

SpaceExpr SpaceExpr::desugared() const {
  switch (kind()) {
    case Kind::Empty:
    case Kind::Point:
    case Kind::BG:
      return *this;
    case Kind::Pushout:
      return pushout(children()[0].desugared(), children()[1].desugared(),
                     children()[2].desugared());
    case Kind::Susp:
      return pushout(children()[0].desugared(), point(), point());
    case Kind::Wedge:
      return pushout(point(), children()[0].desugared(),
                     children()[1].desugared());
    case Kind::Disjoint: {
      SpaceExpr acc = children()[0].desugared();
      for (size_t i = 1; i < children().size(); ++i) {
        acc = pushout(empty(), acc, children()[i].desugared());
      }
      return acc;
    }
  }
  throw InvalidInputError("corrupt expression node");
}

std::string SpaceExpr::to_text() const {
  switch (kind()) {
    case Kind::Empty:
      return "empty";
    case Kind::Point:
      return "point";
    case Kind::BG:
      return "B(" + group().name() + ")";
    case Kind::Pushout:
      return "pushout(" + children()[0].to_text() + "; " +
             children()[1].to_text() + "; " + children()[2].to_text() + ")";
    case Kind::Susp:
      return "susp(" + children()[0].to_text() + ")";
    case Kind::Wedge:
      return "wedge(" + children()[0].to_text() + ", " +
             children()[1].to_text() + ")";
    case Kind::Disjoint: {
      std::string out = "disjoint(";
      for (size_t i = 0; i < children().size(); ++i) {
        if (i) out += ", ";
        out += children()[i].to_text();
      }
      return out + ")";
    }
  }
  throw InvalidInputError("corrupt expression node");
}

bool SpaceExpr::operator==(const SpaceExpr& rhs) const {
  if (node_ == rhs.node_) return true;
  if (kind() != rhs.kind()) return false;
  if (kind() == Kind::BG) {
    return group().name() == rhs.group().name() &&
           group().table() == rhs.group().table();
  }
  if (children().size() != rhs.children().size()) return false;
  for (size_t i = 0; i < children().size(); ++i) {
    if (children()[i] != rhs.children()[i]) return false;
  }
  return true;
}

}  // namespace eulerk
