#include <random>

#include "doctest.h"
#include "eulerk/catalog.hpp"
#include "eulerk/error.hpp"
#include "eulerk/parse.hpp"
#include "eulerk/space.hpp"

using namespace eulerk;

TEST_CASE("parse atoms") {
  CHECK(parse_space("point") == SpaceExpr::point());
  CHECK(parse_space("empty") == SpaceExpr::empty());
  CHECK(parse_space("B(C6)") == SpaceExpr::bg(build_catalog_group("C6")));
}

TEST_CASE("parse the pushout square") {
  const SpaceExpr expr = parse_space("pushout(B(C6); B(C2); B(C3))");
  REQUIRE(expr.kind() == SpaceExpr::Kind::Pushout);
  CHECK(expr.children()[0].group().name() == "C6");
  CHECK(expr.children()[1].group().name() == "C2");
  CHECK(expr.children()[2].group().name() == "C3");
}

TEST_CASE("parse is whitespace insensitive") {
  CHECK(parse_space(" pushout( B(C6) ;\n  B(C2); B(C3) ) ") ==
        parse_space("pushout(B(C6);B(C2);B(C3))"));
}

TEST_CASE("sugar desugars as specified") {
  const SpaceExpr s0 = parse_space("susp(disjoint(point, point))");
  const SpaceExpr expected = SpaceExpr::pushout(
      SpaceExpr::pushout(SpaceExpr::empty(), SpaceExpr::point(),
                         SpaceExpr::point()),
      SpaceExpr::point(), SpaceExpr::point());
  CHECK(s0.desugared() == expected);

  CHECK(parse_space("wedge(B(C2), B(C3))").desugared() ==
        SpaceExpr::pushout(SpaceExpr::point(),
                           SpaceExpr::bg(build_catalog_group("C2")),
                           SpaceExpr::bg(build_catalog_group("C3"))));

  // desugared trees contain no sugar nodes
  const SpaceExpr deep =
      parse_space("disjoint(susp(point), wedge(point, empty), point)")
          .desugared();
  std::vector<SpaceExpr> stack = {deep};
  while (!stack.empty()) {
    const SpaceExpr e = stack.back();
    stack.pop_back();
    CHECK(e.kind() != SpaceExpr::Kind::Susp);
    CHECK(e.kind() != SpaceExpr::Kind::Wedge);
    CHECK(e.kind() != SpaceExpr::Kind::Disjoint);
    for (const auto& c : e.children()) stack.push_back(c);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_space("pushout(point; point)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_space(""), ParseError);
  CHECK_THROWS_AS(parse_space("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_space("point point"), ParseError);
  CHECK_THROWS_AS(parse_space("B(C999)"), LimitError);
  CHECK_THROWS_AS(parse_space("B(Z5)"), ParseError);
  CHECK_THROWS_AS(parse_space("susp(point"), ParseError);
  try {
    parse_space("pushout(point;\n  wedge(point))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

namespace {

SpaceExpr random_tree(std::mt19937_64& rng, int depth) {
  const int r = static_cast<int>(rng() % 100);
  if (depth <= 0 || r < 30) {
    const int t = static_cast<int>(rng() % 4);
    if (t == 0) return SpaceExpr::empty();
    if (t == 1) return SpaceExpr::point();
    const char* specs[] = {"C2", "C6", "D4", "Q8", "S3", "C3xC3"};
    return SpaceExpr::bg(build_catalog_group(specs[rng() % 6]));
  }
  if (r < 55) {
    return SpaceExpr::pushout(random_tree(rng, depth - 1),
                              random_tree(rng, depth - 1),
                              random_tree(rng, depth - 1));
  }
  if (r < 70) {
    std::vector<SpaceExpr> children;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) children.push_back(random_tree(rng, depth - 1));
    return SpaceExpr::disjoint(std::move(children));
  }
  if (r < 85) return SpaceExpr::susp(random_tree(rng, depth - 1));
  return SpaceExpr::wedge(random_tree(rng, depth - 1),
                          random_tree(rng, depth - 1));
}

}  // namespace

TEST_CASE("print-parse round trip is the identity on random trees") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceExpr expr = random_tree(rng, 5);
    CHECK(parse_space(expr.to_text()) == expr);
  }
}
