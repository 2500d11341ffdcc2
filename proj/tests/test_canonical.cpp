#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "eulerk/canonical.hpp"
#include "eulerk/catalog.hpp"
#include "eulerk/hom.hpp"

using namespace eulerk;

namespace {

FiniteGroup G(const char* spec) { return build_catalog_group(spec); }

// corner-order reading of a relabeled table
std::vector<int> corner_string(const FiniteGroup& g,
                               const std::vector<int>& to_old) {
  const int n = g.order();
  std::vector<int> to_new(n);
  for (int l = 0; l < n; ++l) to_new[to_old[l]] = l;
  std::vector<int> out;
  auto entry = [&](int i, int j) {
    out.push_back(to_new[g.mul(to_old[i], to_old[j])]);
  };
  for (int k = 1; k < n; ++k) {
    for (int i = 1; i < k; ++i) {
      entry(i, k);
      entry(k, i);
    }
    entry(k, k);
  }
  return out;
}

// Oracle: minimum over all (n-1)! identity-fixing relabelings.
std::vector<int> brute_force_canonical(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> to_old(n);
  std::iota(to_old.begin(), to_old.end(), 0);
  std::vector<int> best_string;
  std::vector<int> best_labeling;
  do {
    std::vector<int> s = corner_string(g, to_old);
    if (best_string.empty() || s < best_string) {
      best_string = s;
      best_labeling = to_old;
    }
  } while (std::next_permutation(to_old.begin() + 1, to_old.end()));

  std::vector<int> to_new(n);
  for (int l = 0; l < n; ++l) to_new[best_labeling[l]] = l;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<size_t>(i) * n + j] =
          to_new[g.mul(best_labeling[i], best_labeling[j])];
    }
  }
  return table;
}

// digit-addition table over a mixed radix, independent of the library
std::vector<int> digit_table(const std::vector<int>& factors) {
  int n = 1;
  for (int f : factors) n *= f;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int value = 0, stride = 1, x = a, y = b;
      for (int f : factors) {
        value += ((x + y) % f) * stride;
        x /= f;
        y /= f;
        stride *= f;
      }
      table[static_cast<size_t>(a) * n + b] = value;
    }
  }
  return table;
}

}  // namespace

TEST_CASE("non-abelian canonical tables match the exhaustive oracle") {
  for (const char* spec : {"S3", "D4", "Q8", "D5"}) {
    CAPTURE(spec);
    CHECK(canonical_table(G(spec)) == brute_force_canonical(G(spec)));
  }
}

TEST_CASE("abelian canonical tables are primary-decomposition digit tables") {
  const std::pair<const char*, std::vector<int>> cases[] = {
      {"C1", {}},          {"C2", {2}},          {"C4", {4}},
      {"C2xC2", {2, 2}},   {"C6", {2, 3}},       {"C3xC2", {2, 3}},
      {"C12", {4, 3}},     {"C4xC2", {4, 2}},    {"C2xC4", {4, 2}},
      {"C9xC3", {9, 3}},   {"C8xC4", {8, 4}},    {"C2xC6", {2, 2, 3}},
      {"C6xC6", {2, 2, 3, 3}},                   {"C30", {2, 3, 5}},
      {"C2xC2xC2xC2xC2", {2, 2, 2, 2, 2}}};
  for (const auto& [spec, factors] : cases) {
    CAPTURE(spec);
    CHECK(canonical_table(G(spec)) == digit_table(factors));
  }
}

TEST_CASE("canonical table is a relabeling-invariant of the class") {
  const std::pair<const char*, const char*> pairs[] = {
      {"C6", "C2xC3"},     {"C6", "C3xC2"},   {"D3", "S3"},
      {"C2xC2", "D2"},     {"C12", "C4xC3"},  {"D6", "S3xC2"},
      {"C2xC2xC3", "C6xC2"}, {"D4xC2", "C2xD4"}};
  for (const auto& [a, b] : pairs) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(canonical_table(G(a)) == canonical_table(G(b)));
    CHECK(canonical_key(G(a)) == canonical_key(G(b)));
  }
  CHECK(canonical_key(G("C4")) != canonical_key(G("C2xC2")));
  CHECK(canonical_key(G("D4")) != canonical_key(G("Q8")));
  CHECK(canonical_key(G("D6")) != canonical_key(G("C12")));
}

TEST_CASE("canonical keys are computable across the p-group range") {
  for (const char* spec :
       {"C16", "C8xC2", "C4xC4", "C4xC2xC2", "C2xC2xC2xC2", "D8", "D4xC2",
        "Q8xC2", "C27", "C9xC3", "C3xC3xC3", "C32", "C16xC2", "C8xC4",
        "C4xC2xC2xC2", "C2xC2xC2xC2xC2", "D4xC4", "Q8xC4", "D8xC2",
        "D4xC2xC2", "Q8xC2xC2", "D16"}) {
    CAPTURE(spec);
    const FiniteGroup g = G(spec);
    CHECK(canonical_key(g).size() > 4);
    CHECK(canonical_key(g) == canonical_key(g));
  }
}

TEST_CASE("canonical ordering sorts by order first") {
  CHECK(canonical_key(G("C2")) < canonical_key(G("C3")));
  CHECK(canonical_key(G("C9")) < canonical_key(G("C2xC5")));
}

TEST_CASE("canonical names") {
  CHECK(canonical_name(G("C2xC3")) == "C6");
  CHECK(canonical_name(G("C3xC2")) == "C6");
  CHECK(canonical_name(G("table:[0,1,1,0]")) == "C2");
  CHECK(canonical_name(G("Q8")) == "Q8");
  CHECK(canonical_name(G("D2")) == "C2xC2");
  CHECK(canonical_name(sylow_decomposition(G("S4")).sylow.at(2)) == "D4");
  CHECK(canonical_name(sylow_decomposition(G("D6")).sylow.at(2)) == "C2xC2");
  CHECK(canonical_name(sylow_decomposition(G("C12")).sylow.at(2)) == "C4");
}

TEST_CASE("canonical names re-parse to the same class") {
  for (const char* spec : {"C11", "C9xC3", "D4", "C2xC2xC2xC2", "D4xC4"}) {
    const FiniteGroup g = G(spec);
    const std::string name = canonical_name(g);
    CHECK(is_isomorphic(build_catalog_group(name), g));
  }
}
