#include <thread>
#include <vector>

#include "doctest.h"
#include "eulerk/canonical.hpp"
#include "eulerk/catalog.hpp"
#include "eulerk/charfn.hpp"
#include "eulerk/parse.hpp"

using namespace eulerk;

// The caches behind rep counts, subgroup lattices and canonical keys are
// shared; hammer them from several threads and check every thread sees
// identical values.
TEST_CASE("concurrent evaluation returns identical values") {
  const char* exprs[] = {"B(C6)", "wedge(B(C3), B(C3))",
                         "pushout(B(C6); B(C2); B(C3))", "susp(B(D4))",
                         "B(Q8xC3)"};
  constexpr int kThreads = 8;
  std::vector<std::vector<std::string>> results(kThreads);
  std::vector<std::thread> threads;
  threads.reserve(kThreads);
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([t, &exprs, &results]() {
      const CharFunction bd =
          CharFunction::assembled(BasisAssignment::baez_dolan());
      const CharFunction chi_c2 =
          CharFunction::chi(build_catalog_group("C2"));
      for (int round = 0; round < 3; ++round) {
        for (const char* text : exprs) {
          const SpaceExpr expr = parse_space(text);
          results[t].push_back(bd(expr).to_string());
          results[t].push_back(chi_c2(expr).to_string());
          results[t].push_back(
              canonical_name(build_catalog_group("C4xC2")));
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < kThreads; ++t) {
    CHECK(results[t] == results[0]);
  }
  CHECK(results[0][0] == "-1/6");
}
