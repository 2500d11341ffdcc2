#include <random>
#include <set>

#include "doctest.h"
#include "eulerk/catalog.hpp"
#include "eulerk/hom.hpp"
#include "eulerk/poset.hpp"
#include "eulerk/verify.hpp"

using namespace eulerk;

namespace {

FiniteGroup G(const char* spec) { return build_catalog_group(spec); }

}  // namespace

TEST_CASE("quotient poset shapes") {
  CHECK(quotient_poset(G("C1")).size() == 1);

  const QuotientPoset c4 = quotient_poset(G("C4"));
  REQUIRE(c4.size() == 3);
  CHECK(c4.top() == 0);
  CHECK(c4.kernel(c4.top()).elements.size() == 1);
  CHECK(c4.kernel(c4.bottom()).elements.size() == 4);
  // chain: bottom <= middle <= top
  CHECK(c4.leq(2, 1));
  CHECK(c4.leq(1, 0));
  CHECK(c4.leq(2, 0));
  CHECK_FALSE(c4.leq(0, 1));

  const QuotientPoset klein = quotient_poset(G("C2xC2"));
  REQUIRE(klein.size() == 5);
  int middles = 0;
  for (int i = 0; i < klein.size(); ++i) {
    if (klein.kernel(i).elements.size() == 2) ++middles;
  }
  CHECK(middles == 3);
  // the three middle nodes are incomparable
  CHECK_FALSE(klein.leq(1, 2));
  CHECK_FALSE(klein.leq(2, 1));
}

namespace {

// g -> index of its coset in g/kernel, with the same labeling convention
// as quotient(): cosets named by minimal element, sorted ascending
std::vector<int> projection_map(const FiniteGroup& g,
                                const std::vector<int>& kernel) {
  std::vector<int> rep(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int best = a;
    for (int x : kernel) best = std::min(best, g.mul(a, x));
    rep[a] = best;
  }
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (rep[a] == a) reps.push_back(a);
  }
  std::vector<int> out(g.order());
  for (int a = 0; a < g.order(); ++a) {
    out[a] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(),
                                               rep[a]) -
                              reps.begin());
  }
  return out;
}

}  // namespace

TEST_CASE("poset order matches commuting-surjection existence") {
  // T >= S iff some surjection quotient(T) -> quotient(S) commutes with
  // the two projections; checked by brute force over all homs
  for (const char* spec : {"C4", "C2xC2", "S3", "C6", "D4", "Q8", "C12"}) {
    const FiniteGroup base = G(spec);
    const QuotientPoset poset = quotient_poset(base);
    for (int t = 0; t < poset.size(); ++t) {
      const FiniteGroup qt = poset.quotient_at(t);
      const auto proj_t = projection_map(base, poset.kernel(t).elements);
      for (int s = 0; s < poset.size(); ++s) {
        const FiniteGroup qs = poset.quotient_at(s);
        const auto proj_s = projection_map(base, poset.kernel(s).elements);
        bool commuting_surjection = false;
        for (const auto& hom : enumerate_homs(qt, qs)) {
          std::set<int> image(hom.images.begin(), hom.images.end());
          if (static_cast<int>(image.size()) != qs.order()) continue;
          bool commutes = true;
          for (int a = 0; a < base.order() && commutes; ++a) {
            if (hom.images[proj_t[a]] != proj_s[a]) commutes = false;
          }
          if (commutes) {
            commuting_surjection = true;
            break;
          }
        }
        CAPTURE(spec);
        CHECK(commuting_surjection == poset.leq(s, t));
      }
    }
  }
}

TEST_CASE("mobius values on the named posets") {
  const MobiusData single = mobius(quotient_poset(G("C1")));
  CHECK(single.mu == std::vector<std::vector<long long>>{{1}});

  const QuotientPoset c4 = quotient_poset(G("C4"));
  const MobiusData mc4 = mobius(c4);
  CHECK(mc4.mu[0][0] == 1);
  CHECK(mc4.mu[0][1] == -1);
  CHECK(mc4.mu[0][2] == 0);

  const QuotientPoset klein = quotient_poset(G("C2xC2"));
  const MobiusData mk = mobius(klein);
  CHECK(mk.mu[0][0] == 1);
  CHECK(mk.mu[0][1] == -1);
  CHECK(mk.mu[0][2] == -1);
  CHECK(mk.mu[0][3] == -1);
  CHECK(mk.mu[0][4] == 2);
}

TEST_CASE("mobius defining property and top-row sum across the catalog") {
  for (const auto& group : catalog_groups_up_to(16)) {
    const QuotientPoset poset = quotient_poset(group);
    const MobiusData data = mobius(poset);
    for (int t = 0; t < poset.size(); ++t) {
      CHECK(data.mu[t][t] == 1);
      for (int s = 0; s < poset.size(); ++s) {
        if (s == t || !poset.leq(s, t)) continue;
        long long sum = 0;
        for (int r = 0; r < poset.size(); ++r) {
          if (poset.leq(s, r) && poset.leq(r, t)) sum += data.mu[t][r];
        }
        CHECK(sum == 0);
      }
    }
    if (poset.size() > 1) {
      long long top_row = 0;
      for (int s = 0; s < poset.size(); ++s) {
        if (poset.leq(s, poset.top())) top_row += data.mu[poset.top()][s];
      }
      CHECK(top_row == 0);
    }
  }
}

TEST_CASE("invert on the named examples") {
  const QuotientPoset c4 = quotient_poset(G("C4"));
  const MobiusData mc4 = mobius(c4);
  CHECK(invert(c4, mc4, {Rat(0), Rat(0), Rat(0)}) ==
        std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
  // f = (top, middle, bottom) = (4, 2, 1): g(top) = 4 - 2 = 2
  CHECK(invert(c4, mc4, {Rat(4), Rat(2), Rat(1)})[c4.top()] == Rat(2));

  const QuotientPoset klein = quotient_poset(G("C2xC2"));
  const std::vector<Rat> ones(5, Rat(1));
  CHECK(invert(klein, mobius(klein), ones)[klein.top()] == Rat(0));
}

TEST_CASE("round trip: inversion recovers summands on every catalog poset") {
  std::mt19937_64 rng(424242);
  for (const auto& group : catalog_groups_up_to(16)) {
    const QuotientPoset poset = quotient_poset(group);
    const MobiusData data = mobius(poset);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> g(poset.size());
      for (auto& v : g) v = Rat(static_cast<long long>(rng() % 41) - 20);
      std::vector<Rat> f(poset.size());
      for (int t = 0; t < poset.size(); ++t) {
        for (int s = 0; s < poset.size(); ++s) {
          if (poset.leq(s, t)) f[t] += g[s];
        }
      }
      CHECK(invert(poset, data, f) == g);
    }
  }
}

TEST_CASE("restriction multiplicity is the order indicator on the catalog") {
  for (const auto& group : catalog_groups_up_to(16)) {
    const QuotientPoset poset = quotient_poset(group);
    for (int t = 0; t < poset.size(); ++t) {
      for (int s = 0; s < poset.size(); ++s) {
        CAPTURE(group.name());
        CHECK(restriction_multiplicity(poset, t, s) ==
              (poset.leq(s, t) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("mobius splitter hook validates weights") {
  const QuotientPoset c4 = quotient_poset(G("C4"));
  const MobiusData viaHook =
      mobius(c4, [](int, int, long long mu_bar, int multiplicity) {
        return std::vector<long long>(static_cast<size_t>(multiplicity),
                                      mu_bar);
      });
  CHECK(viaHook.mu == mobius(c4).mu);
  CHECK_THROWS(mobius(c4, [](int, int, long long, int) {
    return std::vector<long long>{1, 2};
  }));
}
