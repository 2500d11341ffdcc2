#include "eulerk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "eulerk/basis.hpp"
#include "eulerk/canonical.hpp"
#include "eulerk/catalog.hpp"
#include "eulerk/charfn.hpp"
#include "eulerk/error.hpp"
#include "eulerk/hom.hpp"
#include "eulerk/k0.hpp"
#include "eulerk/parse.hpp"

namespace eulerk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SuiteTimer {
  Clock::time_point start = Clock::now();
  void finish(VerifyReport& report) const {
    report.seconds = seconds_since(start);
  }
};

}  // namespace

std::vector<FiniteGroup> catalog_groups_up_to(int max_order,
                                              const Limits& limits) {
  Limits local = limits;
  local.max_order = std::max(local.max_order, max_order);

  std::vector<std::string> atoms;
  for (int n = 2; n <= max_order; ++n) atoms.push_back("C" + std::to_string(n));
  for (int n = 2; 2 * n <= max_order; ++n) {
    atoms.push_back("D" + std::to_string(n));
  }
  if (max_order >= 8) atoms.push_back("Q8");
  if (max_order >= 6) atoms.push_back("S3");
  if (max_order >= 24) atoms.push_back("S4");

  std::vector<int> atom_orders;
  for (const auto& a : atoms) {
    if (a == "Q8") {
      atom_orders.push_back(8);
    } else if (a == "S3") {
      atom_orders.push_back(6);
    } else if (a == "S4") {
      atom_orders.push_back(24);
    } else {
      int n = std::stoi(a.substr(1));
      atom_orders.push_back(a[0] == 'D' ? 2 * n : n);
    }
  }

  std::map<std::string, FiniteGroup> by_key;
  by_key.emplace(canonical_key(FiniteGroup::trivial()),
                 FiniteGroup::trivial());
  std::vector<size_t> combo;
  auto rec = [&](auto&& self, size_t start, int order) -> void {
    if (!combo.empty()) {
      std::string spec = atoms[combo[0]];
      for (size_t i = 1; i < combo.size(); ++i) spec += "x" + atoms[combo[i]];
      FiniteGroup g = build_catalog_group(spec, local);
      by_key.emplace(canonical_key(g), std::move(g));
    }
    for (size_t i = start; i < atoms.size(); ++i) {
      const long long next = static_cast<long long>(order) * atom_orders[i];
      if (next > max_order) continue;
      combo.push_back(i);
      self(self, i, static_cast<int>(next));
      combo.pop_back();
    }
  };
  rec(rec, 0, 1);

  std::vector<FiniteGroup> out;
  out.reserve(by_key.size());
  std::vector<std::pair<std::pair<int, std::string>, FiniteGroup>> ranked;
  for (auto& [key, g] : by_key) {
    ranked.emplace_back(std::make_pair(g.order(), key), std::move(g));
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [rank, g] : ranked) out.push_back(std::move(g));
  return out;
}

std::vector<FiniteGroup> catalog_p_groups(int prime, int max_order,
                                          const Limits& limits) {
  std::vector<FiniteGroup> out;
  for (auto& g : catalog_groups_up_to(max_order, limits)) {
    if (g.order() < 2) continue;
    const auto factors = factorize(g.order());
    if (factors.size() == 1 && factors.begin()->first == prime) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

VerifyReport verify_golden_values(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "golden-values";
  report.pass = true;
  const CharFunction chi =
      CharFunction::assembled(BasisAssignment::baez_dolan(), limits);
  for (auto [p, q] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 5}}) {
    const std::string leaf = "B(C" + std::to_string(p * q) + ")";
    const std::string square = "pushout(" + leaf + "; B(C" +
                               std::to_string(p) + "); B(C" +
                               std::to_string(q) + "))";
    const Rat expected = Rat(1, p) + Rat(1, q) - Rat(1);
    const Rat got = chi(parse_space(leaf, limits));
    const Rat collapsed = chi(parse_space(square, limits));
    report.checks += 2;
    if (got != expected || collapsed != Rat(1)) {
      report.pass = false;
      report.counterexample = leaf + " -> " + got.to_string() + ", " + square +
                              " -> " + collapsed.to_string();
      break;
    }
    report.summary += "chi(" + leaf + ") = " + got.to_string() + ", " +
                      square + " = " + collapsed.to_string() + "\n";
  }
  timer.finish(report);
  return report;
}

VerifyReport verify_delta_oracle(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "delta-oracle";
  report.pass = true;

  Limits local = limits;
  local.max_order = std::max(local.max_order, 27);
  local.max_hom_order = std::max(local.max_hom_order, 27);

  std::vector<FiniteGroup> groups = catalog_p_groups(2, 16, local);
  for (auto& g : catalog_p_groups(3, 27, local)) groups.push_back(std::move(g));

  for (const auto& k : groups) {
    const int pk = factorize(k.order()).begin()->first;
    for (const auto& h : groups) {
      if (factorize(h.order()).begin()->first != pk) continue;
      const long long via_mobius = indicator_on_group(k, h, local);
      const long long brute = mono_rep_count(k, h, local);
      ++report.checks;
      if (via_mobius != brute) {
        report.pass = false;
        report.counterexample = "K=" + k.name() + " H=" + h.name() +
                                ": mobius " + std::to_string(via_mobius) +
                                " != brute " + std::to_string(brute);
        timer.finish(report);
        return report;
      }
    }
  }
  report.summary = std::to_string(report.checks) +
                   " same-prime ordered pairs agree with the injective-class "
                   "count\n";
  timer.finish(report);
  return report;
}

VerifyReport verify_factorization(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "factorization";
  report.pass = true;
  const auto groups = catalog_groups_up_to(16, limits);
  for (const auto& g : groups) {
    const auto normals = normal_subgroups(g);
    for (const auto& h : groups) {
      const long long reps = rep_count(g, h, limits);
      long long sum = 0;
      for (const auto& n : normals) {
        sum += mono_rep_count(quotient(g, n), h, limits);
      }
      ++report.checks;
      if (reps != sum) {
        report.pass = false;
        report.counterexample = "G=" + g.name() + " H=" + h.name() + ": rep " +
                                std::to_string(reps) + " != sum " +
                                std::to_string(sum);
        timer.finish(report);
        return report;
      }
    }
  }
  report.summary = std::to_string(report.checks) +
                   " pairs satisfy rep(G,H) = sum over N of mono(G/N, H)\n";
  timer.finish(report);
  return report;
}

VerifyReport verify_reconstruction(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "reconstruction";
  report.pass = true;

  std::vector<BasisElement> basis = {BasisElement::star()};
  for (const auto& g : catalog_p_groups(2, 8, limits)) {
    basis.push_back(BasisElement::p_group(g));
  }
  std::sort(basis.begin(), basis.end());

  std::mt19937_64 rng(0x5eed0001ULL);
  auto random_rat = [&rng]() {
    const long long num = static_cast<long long>(rng() % 121) - 60;
    const long long den = static_cast<long long>(rng() % 30) + 1;
    return Rat(num, den);
  };

  for (int trial = 0; trial < 100 && report.pass; ++trial) {
    BasisFunction f;
    for (const auto& elem : basis) f.entries.emplace_back(elem, random_rat());
    const auto coeffs = solve_basis_coefficients(f, limits);

    std::vector<std::pair<Rat, FiniteGroup>> terms;
    for (const auto& [elem, c] : coeffs) {
      terms.emplace_back(
          c, elem.is_star() ? FiniteGroup::trivial() : elem.group());
    }
    const CharFunction combo = CharFunction::delta_combination(terms, limits);

    for (size_t j = 0; j < f.entries.size(); ++j) {
      const auto& [elem, prescribed] = f.entries[j];
      const SpaceExpr leaf = elem.is_star()
                                 ? SpaceExpr::point()
                                 : SpaceExpr::bg(elem.group());
      const Rat got = combo(leaf);
      ++report.checks;
      if (got != prescribed) {
        report.pass = false;
        report.counterexample =
            "trial " + std::to_string(trial) + ", [" + elem.display_name() +
            "]: got " + got.to_string() + ", want " + prescribed.to_string();
        break;
      }
    }
  }
  if (report.pass) {
    report.summary = "100 random prescriptions on {*} + 2-groups of order "
                     "<= 8 reconstructed exactly (" +
                     std::to_string(report.checks) + " values)\n";
  }
  timer.finish(report);
  return report;
}

namespace {

const std::vector<std::string>& nilpotent_leaf_specs() {
  static const std::vector<std::string> specs = {
      "C2",       "C3",     "C4",         "C5",     "C6",
      "C7",       "C8",     "C9",         "C10",    "C12",
      "C14",      "C15",    "C16",        "C18",    "C20",
      "C21",      "C24",    "C25",        "C27",    "C28",
      "C30",      "C32",    "C33",        "C35",    "C36",
      "C2xC2",    "C3xC3",  "C2xC2xC2",   "C4xC2",  "C9xC3",
      "C4xC4",    "C5xC5",  "C6xC6",      "D4",     "Q8",
      "D4xC3",    "Q8xC3",  "C2xC2xC2xC2", "C8xC4", "C16xC2",
      "C12xC3",   "C4xC9",  "C2xC2xC2xC2xC2"};
  return specs;
}

SpaceExpr random_expr(std::mt19937_64& rng, int depth,
                      const std::vector<FiniteGroup>& leaves) {
  const auto leaf = [&]() -> SpaceExpr {
    const int t = static_cast<int>(rng() % 10);
    if (t == 0) return SpaceExpr::empty();
    if (t <= 2) return SpaceExpr::point();
    return SpaceExpr::bg(leaves[rng() % leaves.size()]);
  };
  if (depth <= 0) return leaf();
  const int r = static_cast<int>(rng() % 100);
  if (r < 35) return leaf();
  if (r < 60) {
    return SpaceExpr::pushout(random_expr(rng, depth - 1, leaves),
                              random_expr(rng, depth - 1, leaves),
                              random_expr(rng, depth - 1, leaves));
  }
  if (r < 75) {
    std::vector<SpaceExpr> children;
    const int k = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      children.push_back(random_expr(rng, depth - 1, leaves));
    }
    return SpaceExpr::disjoint(std::move(children));
  }
  if (r < 88) return SpaceExpr::susp(random_expr(rng, depth - 1, leaves));
  return SpaceExpr::wedge(random_expr(rng, depth - 1, leaves),
                          random_expr(rng, depth - 1, leaves));
}

}  // namespace

VerifyReport verify_assembly(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "assembly";
  report.pass = true;

  std::vector<FiniteGroup> leaves;
  for (const auto& spec : nilpotent_leaf_specs()) {
    leaves.push_back(build_catalog_group(spec, limits));
  }

  std::mt19937_64 rng(0x5eed0002ULL);
  for (int trial = 0; trial < 200 && report.pass; ++trial) {
    const SpaceExpr expr = random_expr(rng, 6, leaves);
    const BasisAssignment values =
        BasisAssignment::seeded(0xabc0000ULL + trial);

    std::vector<int> projected;
    const Rat via_assembly =
        evaluate_assembled(values, expr, limits, &projected);
    const Rat via_leafwise =
        CharFunction::assembled_leafwise(values, limits).evaluate(expr);
    const Rat via_pairing = pair(k0_class(expr, limits), values);

    const std::set<int> support = torsion_support(expr, limits);
    const std::set<int> projected_set(projected.begin(), projected.end());

    report.checks += 3;
    if (via_assembly != via_leafwise || via_assembly != via_pairing ||
        projected_set != support || projected.size() != support.size()) {
      report.pass = false;
      report.counterexample =
          "trial " + std::to_string(trial) + ": " + expr.to_text() +
          " -> assembly " + via_assembly.to_string() + ", leafwise " +
          via_leafwise.to_string() + ", pairing " + via_pairing.to_string();
    }
  }
  if (report.pass) {
    report.summary = "200 random nilpotent-leaf expressions: assembly, "
                     "leafwise and pairing evaluations agree; only "
                     "supporting primes projected\n";
  }
  timer.finish(report);
  return report;
}

VerifyReport verify_suspension(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "suspension";
  report.pass = true;

  std::vector<CharFunction> chars;
  chars.push_back(CharFunction::assembled(BasisAssignment::baez_dolan(), limits));
  chars.push_back(CharFunction::euler_rational());
  for (const char* spec : {"C1", "C2", "S3", "C6"}) {
    chars.push_back(CharFunction::chi(build_catalog_group(spec, limits), limits));
  }

  SpaceExpr sphere =
      SpaceExpr::disjoint({SpaceExpr::point(), SpaceExpr::point()});
  for (int n = 0; n <= 10; ++n) {
    const Rat expected(1 + (n % 2 == 0 ? 1 : -1));
    for (const auto& f : chars) {
      const Rat got = f(sphere);
      ++report.checks;
      if (got != expected) {
        report.pass = false;
        report.counterexample = "S^" + std::to_string(n) + " under " +
                                f.description() + ": got " + got.to_string() +
                                ", want " + expected.to_string();
        timer.finish(report);
        return report;
      }
    }
    sphere = SpaceExpr::susp(sphere);
  }
  report.summary = "chi(S^n) = 1 + (-1)^n for n <= 10 under every built-in "
                   "characteristic\n";
  timer.finish(report);
  return report;
}

VerifyReport verify_fibration_failure(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "fibration-failure";
  const CharFunction chi =
      CharFunction::assembled(BasisAssignment::baez_dolan(), limits);
  const Rat total = chi(parse_space("B(C6)", limits));
  const Rat product = chi(parse_space("B(C2)", limits)) *
                      chi(parse_space("B(C3)", limits));
  report.checks = 3;
  report.pass =
      total == Rat(-1, 6) && product == Rat(1, 6) && total != product;
  report.summary = "chi(B(C6)) = " + total.to_string() +
                   " differs from chi(B(C2))*chi(B(C3)) = " +
                   product.to_string() + "\n";
  if (!report.pass) {
    report.counterexample = "multiplicativity did not fail as required";
  }
  timer.finish(report);
  return report;
}

VerifyReport verify_wall(const Limits& limits) {
  SuiteTimer timer;
  VerifyReport report;
  report.suite = "wall";
  const CharFunction chi =
      CharFunction::assembled(BasisAssignment::baez_dolan(), limits);
  const Rat mixed = chi(parse_space("wedge(B(C2), B(C3))", limits));
  const Rat pure = chi(parse_space("wedge(B(C3), B(C3))", limits));
  report.checks = 3;
  report.pass = Rat(2) * mixed == pure && pure == Rat(-1, 3) &&
                mixed == Rat(-1, 6);
  report.summary = "2 * chi(B(C2) v B(C3)) = " + (Rat(2) * mixed).to_string() +
                   " = chi(B(C3) v B(C3)) = " + pure.to_string() + "\n";
  if (!report.pass) report.counterexample = "wall consistency failed";
  timer.finish(report);
  return report;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "delta-oracle", "reconstruction", "assembly", "fibration-failure",
      "wall"};
  return names;
}

VerifyReport run_verify_suite(const std::string& name, const Limits& limits) {
  if (name == "delta-oracle") return verify_delta_oracle(limits);
  if (name == "reconstruction") return verify_reconstruction(limits);
  if (name == "assembly") return verify_assembly(limits);
  if (name == "fibration-failure") return verify_fibration_failure(limits);
  if (name == "wall") return verify_wall(limits);
  throw InvalidInputError(
      "unknown verification suite '" + name +
      "' (expected delta-oracle, reconstruction, assembly, "
      "fibration-failure or wall)");
}

}  // namespace eulerk
