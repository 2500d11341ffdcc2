#include <random>

#include "doctest.h"
#include "eulerk/catalog.hpp"
#include "eulerk/charfn.hpp"
#include "eulerk/error.hpp"
#include "eulerk/hom.hpp"
#include "eulerk/parse.hpp"
#include "eulerk/verify.hpp"

using namespace eulerk;

namespace {

FiniteGroup G(const char* spec) { return build_catalog_group(spec); }
SpaceExpr E(const char* text) { return parse_space(text); }

}  // namespace

TEST_CASE("homotopy cardinality") {
  CHECK(homotopy_cardinality({}) == Rat(1));
  CHECK(homotopy_cardinality({2}) == Rat(1, 2));
  CHECK(homotopy_cardinality({2, 4, 8}) == Rat(1, 4));
  CHECK(homotopy_cardinality({6}) == Rat(1, 6));
  CHECK(homotopy_cardinality({1, 5}) == Rat(5));
  CHECK_THROWS_AS(homotopy_cardinality({0}), InvalidInputError);
}

TEST_CASE("chi on expressions") {
  // trivial probe: ordinary Euler characteristic, every leaf worth 1
  const CharFunction chi_triv = CharFunction::chi(G("C1"));
  CHECK(chi_triv(E("B(C6)")) == Rat(1));
  CHECK(chi_triv(E("B(Q8)")) == Rat(1));
  CHECK(chi_triv(E("empty")) == Rat(0));

  const CharFunction chi_c2 = CharFunction::chi(G("C2"));
  CHECK(chi_c2(E("B(C4)")) == Rat(2));
  CHECK(chi_c2(E("pushout(point; point; B(C4))")) == Rat(2));
  CHECK(chi_c2.strategy() == EvalStrategy::DirectStructural);
}

TEST_CASE("indicator functions evaluate to injective-class counts") {
  const CharFunction d_c4 = CharFunction::indicator(G("C4"));
  CHECK(d_c4(E("B(C4)")) == Rat(2));  // |Aut(C4)| classes
  CHECK(d_c4(E("B(C2)")) == Rat(0));
  CHECK(d_c4(E("B(C8)")) == Rat(mono_rep_count(G("C4"), G("C8"))));
  CHECK(d_c4.strategy() == EvalStrategy::DeltaCombination);

  // trivial group: indicator is the ordinary Euler characteristic
  const CharFunction d_triv = CharFunction::indicator(G("C1"));
  const CharFunction chi_triv = CharFunction::chi(G("C1"));
  for (const char* text : {"point", "B(C6)", "susp(B(C2))",
                           "pushout(B(C4); point; B(C2))"}) {
    CHECK(d_triv(E(text)) == chi_triv(E(text)));
  }

  // vanishing below the group's order
  for (const char* below : {"C2", "C3", "C4", "C2xC2", "C5", "C7"}) {
    CHECK(CharFunction::indicator(G("Q8"))(
              SpaceExpr::bg(G(below))) == Rat(0));
  }
  CHECK(CharFunction::indicator(G("Q8"))(E("B(Q8)")) > Rat(0));
  CHECK(CharFunction::indicator(G("Q8"))(E("B(D4)")) == Rat(0));
}

TEST_CASE("indicator on the point") {
  CHECK(CharFunction::indicator(G("C1"))(E("point")) == Rat(1));
  CHECK(CharFunction::indicator(G("C4"))(E("point")) == Rat(0));
  CHECK(CharFunction::indicator(G("Q8"))(E("point")) == Rat(0));
}

TEST_CASE("rational euler characteristic") {
  CHECK(rational_euler(E("B(C6)")) == Rat(1));
  CHECK(rational_euler(E("B(D6)")) == Rat(1));  // works on any leaf
  CHECK(rational_euler(E("empty")) == Rat(0));
  CHECK(rational_euler(E("susp(susp(disjoint(point, point)))")) == Rat(2));
}

TEST_CASE("solve basis coefficients on the named cases") {
  const BasisElement star = BasisElement::star();
  const BasisElement bc2 = BasisElement::p_group(G("C2"));

  BasisFunction just_star;
  just_star.entries = {{star, Rat(1)}};
  auto c = solve_basis_coefficients(just_star);
  REQUIRE(c.size() == 1);
  CHECK(c[0].second == Rat(1));

  BasisFunction two;
  two.entries = {{star, Rat(1)}, {bc2, Rat(1, 2)}};
  c = solve_basis_coefficients(two);
  REQUIRE(c.size() == 2);
  CHECK(c[0].second == Rat(1));
  CHECK(c[1].second == Rat(-1, 2));

  BasisFunction zero;
  zero.entries = {{star, Rat(0)},
                  {bc2, Rat(0)},
                  {BasisElement::p_group(G("C4")), Rat(0)}};
  for (const auto& [elem, coeff] : solve_basis_coefficients(zero)) {
    (void)elem;
    CHECK(coeff == Rat(0));
  }
}

TEST_CASE("solver rejects out-of-order prescriptions") {
  BasisFunction bad;
  bad.entries = {{BasisElement::p_group(G("C4")), Rat(1)},
                 {BasisElement::p_group(G("C2")), Rat(1)}};
  CHECK_THROWS_AS(solve_basis_coefficients(bad), InvalidInputError);

  BasisFunction star_late;
  star_late.entries = {{BasisElement::p_group(G("C2")), Rat(1)},
                       {BasisElement::star(), Rat(1)}};
  CHECK_THROWS_AS(solve_basis_coefficients(star_late), InvalidInputError);

  BasisFunction dup;
  dup.entries = {{BasisElement::p_group(G("C2")), Rat(1)},
                 {BasisElement::p_group(G("C2")), Rat(2)}};
  CHECK_THROWS_AS(solve_basis_coefficients(dup), InvalidInputError);
}

TEST_CASE("project prime") {
  const CharFunction bd =
      CharFunction::assembled(BasisAssignment::baez_dolan());
  CHECK(project_prime(bd, 2, E("B(C6)")) == Rat(1, 2));
  CHECK(project_prime(bd, 5, E("B(C6)")) == Rat(1));
  CHECK(project_prime(bd, 2, E("pushout(B(C6); B(C2); B(C3))")) == Rat(1));

  const BasisAssignment shifted = BasisAssignment::from_values(
      {{BasisElement::star(), Rat(7, 3)}});
  CHECK(project_prime(CharFunction::assembled(shifted), 5, E("B(C6)")) ==
        Rat(7, 3));

  CHECK_THROWS_AS(project_prime(bd, 2, E("B(S3)")), NonNilpotentError);
}

TEST_CASE("assembled evaluation: golden values") {
  const CharFunction bd =
      CharFunction::assembled(BasisAssignment::baez_dolan());
  CHECK(bd(E("B(C6)")) == Rat(-1, 6));
  CHECK(bd(E("point")) == Rat(1));
  CHECK(bd(E("wedge(B(C2), B(C3))")) == Rat(-1, 6));
  CHECK(bd(E("wedge(B(C3), B(C3))")) == Rat(-1, 3));
  CHECK(Rat(2) * bd(E("wedge(B(C2), B(C3))")) ==
        bd(E("wedge(B(C3), B(C3))")));
  CHECK(bd(E("B(C10)")) == Rat(1, 2) + Rat(1, 5) - Rat(1));
  CHECK(bd(E("B(C15)")) == Rat(1, 3) + Rat(1, 5) - Rat(1));
  CHECK(bd(E("B(C4)")) == Rat(1, 4));
  CHECK(bd(E("B(Q8)")) == Rat(1, 8));
}

TEST_CASE("assembled evaluation errors") {
  const CharFunction bd =
      CharFunction::assembled(BasisAssignment::baez_dolan());
  CHECK_THROWS_AS(bd(E("B(S3)")), NonNilpotentError);

  const BasisAssignment partial = BasisAssignment::from_values(
      {{BasisElement::star(), Rat(1)}});
  CHECK_THROWS_AS(
      CharFunction::assembled(partial)(E("B(C2)")), MissingValueError);
  const BasisAssignment no_star = BasisAssignment::from_values(
      {{BasisElement::p_group(G("C2")), Rat(1)}});
  CHECK_THROWS_AS(
      CharFunction::assembled(no_star)(E("point")), MissingValueError);
}

TEST_CASE("only supporting primes are projected") {
  std::vector<int> projected;
  evaluate_assembled(BasisAssignment::baez_dolan(), E("B(C30)"),
                     Limits::defaults(), &projected);
  CHECK(projected == std::vector<int>{2, 3, 5});

  projected.clear();
  // the 3-torsion cancels, so no prime is projected at all
  evaluate_assembled(BasisAssignment::baez_dolan(),
                     E("pushout(B(C3); point; B(C3))"), Limits::defaults(),
                     &projected);
  CHECK(projected.empty());
}

TEST_CASE("additivity is preserved by every strategy") {
  std::mt19937_64 rng(5151);
  const std::vector<CharFunction> functions = {
      CharFunction::assembled(BasisAssignment::baez_dolan()),
      CharFunction::euler_rational(),
      CharFunction::chi(G("C2")),
      CharFunction::indicator(G("C4")),
      CharFunction::assembled_leafwise(BasisAssignment::seeded(99)),
  };
  const char* leaves[] = {"point", "empty", "B(C2)", "B(C6)", "B(C3xC3)",
                          "B(Q8)"};
  for (int trial = 0; trial < 30; ++trial) {
    const SpaceExpr a = E(leaves[rng() % 6]);
    const SpaceExpr b = E(leaves[rng() % 6]);
    const SpaceExpr c = E(leaves[rng() % 6]);
    const SpaceExpr d = SpaceExpr::pushout(a, b, c);
    for (const auto& f : functions) {
      CHECK(f(a) + f(d) == f(b) + f(c));
    }
  }
}

TEST_CASE("every strategy vanishes on the empty space") {
  CHECK(CharFunction::assembled(BasisAssignment::baez_dolan())(E("empty")) ==
        Rat(0));
  CHECK(CharFunction::euler_rational()(E("empty")) == Rat(0));
  CHECK(CharFunction::chi(G("C2"))(E("empty")) == Rat(0));
  CHECK(CharFunction::indicator(G("C4"))(E("empty")) == Rat(0));
}

namespace {

SpaceExpr random_sugared(std::mt19937_64& rng, int depth) {
  const int r = static_cast<int>(rng() % 100);
  if (depth <= 0 || r < 30) {
    const int t = static_cast<int>(rng() % 5);
    if (t == 0) return SpaceExpr::empty();
    if (t == 1) return SpaceExpr::point();
    const char* specs[] = {"C2", "C6", "Q8"};
    return SpaceExpr::bg(G(specs[rng() % 3]));
  }
  if (r < 50) {
    return SpaceExpr::pushout(random_sugared(rng, depth - 1),
                              random_sugared(rng, depth - 1),
                              random_sugared(rng, depth - 1));
  }
  if (r < 70) {
    std::vector<SpaceExpr> children;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      children.push_back(random_sugared(rng, depth - 1));
    }
    return SpaceExpr::disjoint(std::move(children));
  }
  if (r < 85) return SpaceExpr::susp(random_sugared(rng, depth - 1));
  return SpaceExpr::wedge(random_sugared(rng, depth - 1),
                          random_sugared(rng, depth - 1));
}

}  // namespace

TEST_CASE("sugared and desugared forms evaluate identically") {
  std::mt19937_64 rng(314159);
  const std::vector<CharFunction> functions = {
      CharFunction::assembled(BasisAssignment::baez_dolan()),
      CharFunction::euler_rational(),
      CharFunction::chi(G("C2")),
      CharFunction::indicator(G("C4")),
  };
  for (int trial = 0; trial < 40; ++trial) {
    const SpaceExpr sugared = random_sugared(rng, 4);
    const SpaceExpr plain = sugared.desugared();
    for (const auto& f : functions) {
      CHECK(f(sugared) == f(plain));
    }
  }
}

TEST_CASE("mixed-prime chi values are formal structural evaluations") {
  // between groups of coprime order only the trivial hom exists, so the
  // probe sees every coprime leaf as a point
  const CharFunction chi_c2 = CharFunction::chi(G("C2"));
  CHECK(chi_c2(E("B(C3)")) == Rat(1));
  CHECK(chi_c2(E("B(C9)")) == Rat(1));
}
