#include "eulerk/charfn.hpp"

#include <map>
#include <mutex>

#include "eulerk/error.hpp"
#include "eulerk/hom.hpp"
#include "eulerk/poset.hpp"

namespace eulerk {

Rat homotopy_cardinality(const std::vector<long long>& orders_from_pi1) {
  BigInt num(1), den(1);
  for (size_t i = 0; i < orders_from_pi1.size(); ++i) {
    if (orders_from_pi1[i] < 1) {
      throw InvalidInputError("homotopy group orders must be positive");
    }
    // index 0 is pi_1 (odd degree)
    if (i % 2 == 0) {
      den = den * BigInt(orders_from_pi1[i]);
    } else {
      num = num * BigInt(orders_from_pi1[i]);
    }
  }
  return Rat(std::move(num), std::move(den));
}

long long indicator_on_group(const FiniteGroup& k, const FiniteGroup& h,
                             const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::string, long long> cache;
  const std::string key = k.table_key() + "|" + h.table_key();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const QuotientPoset poset = quotient_poset(k);
  const MobiusData data = mobius(poset);
  long long value = 0;
  for (int node = 0; node < poset.size(); ++node) {
    const long long mu = data.mu[poset.top()][node];
    if (mu == 0) continue;
    value += mu * rep_count(poset.quotient_at(node), h, limits);
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

namespace {

// Indicator value on the point: 1 for the trivial group, else 0 (the
// Möbius column of the top sums to zero on any larger poset).
long long indicator_on_point(const FiniteGroup& k) {
  return k.order() == 1 ? 1 : 0;
}

struct StructuralRules {
  Rat point;
  std::function<Rat(const FiniteGroup&)> leaf;
};

Rat structural_eval(const SpaceExpr& expr, const StructuralRules& rules) {
  switch (expr.kind()) {
    case SpaceExpr::Kind::Empty:
      return Rat(0);
    case SpaceExpr::Kind::Point:
      return rules.point;
    case SpaceExpr::Kind::BG:
      return rules.leaf(expr.group());
    case SpaceExpr::Kind::Pushout:
      return structural_eval(expr.children()[1], rules) +
             structural_eval(expr.children()[2], rules) -
             structural_eval(expr.children()[0], rules);
    default:
      return structural_eval(expr.desugared(), rules);
  }
}

}  // namespace

CharFunction CharFunction::chi(FiniteGroup probe, const Limits& limits) {
  CharFunction f;
  f.strategy_ = EvalStrategy::DirectStructural;
  f.description_ = "chi-K=" + probe.name();
  f.limits_ = limits;
  f.point_value_ = Rat(1);
  f.leaf_value_ = [probe, limits](const FiniteGroup& g) {
    return Rat(rep_count(probe, g, limits));
  };
  return f;
}

CharFunction CharFunction::euler_rational() {
  CharFunction f;
  f.strategy_ = EvalStrategy::DirectStructural;
  f.description_ = "euler-rational";
  f.point_value_ = Rat(1);
  f.leaf_value_ = [](const FiniteGroup&) { return Rat(1); };
  return f;
}

CharFunction CharFunction::indicator(FiniteGroup group, const Limits& limits) {
  return delta_combination({{Rat(1), std::move(group)}}, limits);
}

CharFunction CharFunction::delta_combination(
    std::vector<std::pair<Rat, FiniteGroup>> terms, const Limits& limits) {
  CharFunction f;
  f.strategy_ = EvalStrategy::DeltaCombination;
  f.description_ = "delta-combination";
  f.limits_ = limits;
  f.delta_terms_ = std::move(terms);
  return f;
}

CharFunction CharFunction::assembled(BasisAssignment values,
                                     const Limits& limits) {
  CharFunction f;
  f.strategy_ = EvalStrategy::Assembly;
  f.description_ = values.description();
  f.limits_ = limits;
  f.values_ = std::move(values);
  return f;
}

CharFunction CharFunction::assembled_leafwise(BasisAssignment values,
                                              const Limits& limits) {
  CharFunction f;
  f.strategy_ = EvalStrategy::DirectStructural;
  f.description_ = values.description() + " (leafwise)";
  f.limits_ = limits;
  f.point_value_ = values.point_value();
  f.leaf_value_ = [values, limits](const FiniteGroup& g) {
    if (g.order() == 1) return values.point_value();
    const SylowDecomposition syl = sylow_decomposition(g);
    if (!syl.nilpotent) {
      throw NonNilpotentError("leaf group '" + g.name() +
                              "' is not nilpotent");
    }
    Rat out;
    long long parts = 0;
    for (const auto& [p, sub] : syl.sylow) {
      (void)p;
      out += values.require(BasisElement::p_group(sub));
      ++parts;
    }
    out -= Rat(parts - 1) * values.point_value();
    return out;
  };
  return f;
}

Rat CharFunction::evaluate(const SpaceExpr& expr,
                           std::vector<int>* projected_primes) const {
  switch (strategy_) {
    case EvalStrategy::DirectStructural:
      return structural_eval(expr, StructuralRules{point_value_, leaf_value_});
    case EvalStrategy::DeltaCombination: {
      const Limits limits = limits_;
      const auto& terms = delta_terms_;
      StructuralRules rules;
      rules.point = Rat(0);
      for (const auto& [c, k] : terms) {
        rules.point += c * Rat(indicator_on_point(k));
      }
      rules.leaf = [&terms, limits](const FiniteGroup& h) {
        Rat out;
        for (const auto& [c, k] : terms) {
          out += c * Rat(indicator_on_group(k, h, limits));
        }
        return out;
      };
      return structural_eval(expr, rules);
    }
    case EvalStrategy::Assembly:
      return evaluate_assembled(values_, expr, limits_, projected_primes);
  }
  throw InvalidInputError("corrupt evaluation strategy");
}

Rat rational_euler(const SpaceExpr& expr) {
  return CharFunction::euler_rational().evaluate(expr);
}

SpaceExpr complete_at_prime(const SpaceExpr& expr, int p,
                            const Limits& limits) {
  switch (expr.kind()) {
    case SpaceExpr::Kind::Empty:
    case SpaceExpr::Kind::Point:
      return expr;
    case SpaceExpr::Kind::BG: {
      const FiniteGroup& g = expr.group();
      if (g.order() == 1 || g.order() % p != 0) return SpaceExpr::point();
      const SylowDecomposition syl = sylow_decomposition(g);
      if (!syl.nilpotent) {
        throw NonNilpotentError("leaf group '" + g.name() +
                                "' is not nilpotent; completion at " +
                                std::to_string(p) + " is undefined here");
      }
      return SpaceExpr::bg(syl.sylow.at(p));
    }
    case SpaceExpr::Kind::Pushout:
      return SpaceExpr::pushout(
          complete_at_prime(expr.children()[0], p, limits),
          complete_at_prime(expr.children()[1], p, limits),
          complete_at_prime(expr.children()[2], p, limits));
    default:
      return complete_at_prime(expr.desugared(), p, limits);
  }
}

Rat project_prime(const CharFunction& f, int p, const SpaceExpr& expr,
                  const Limits& limits) {
  return f.evaluate(complete_at_prime(expr, p, limits));
}

Rat evaluate_assembled(const BasisAssignment& values, const SpaceExpr& expr,
                       const Limits& limits,
                       std::vector<int>* projected_primes) {
  const Rat e = values.point_value();
  const Rat euler = rational_euler(expr);
  Rat out = e * euler;
  // Only the primes in the torsion support contribute; all other
  // projections would equal e * euler and cancel.
  for (int p : torsion_support(expr, limits)) {
    if (projected_primes) projected_primes->push_back(p);
    const SpaceExpr completed = complete_at_prime(expr, p, limits);
    StructuralRules rules;
    rules.point = e;
    rules.leaf = [&values](const FiniteGroup& g) {
      return values.require(BasisElement::p_group(g));
    };
    out += structural_eval(completed, rules) - e * euler;
  }
  return out;
}

std::vector<std::pair<BasisElement, Rat>> solve_basis_coefficients(
    const BasisFunction& f, const Limits& limits) {
  f.validate();
  const size_t n = f.entries.size();
  std::vector<FiniteGroup> groups;
  groups.reserve(n);
  for (const auto& [elem, value] : f.entries) {
    (void)value;
    groups.push_back(elem.is_star() ? FiniteGroup::trivial() : elem.group());
  }

  // evaluation of indicator(K_i) on the leaf of K_j (Star: the point)
  auto indicator_at = [&](size_t i, size_t j) -> long long {
    if (f.entries[j].first.is_star()) return indicator_on_point(groups[i]);
    return indicator_on_group(groups[i], groups[j], limits);
  };

  std::vector<std::pair<BasisElement, Rat>> out;
  out.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    const long long diag = indicator_at(j, j);
    // the count of automorphism classes, always at least 1
    if (diag <= 0) {
      throw InvalidInputError("indicator diagonal must be positive");
    }
    Rat c = f.entries[j].second;
    for (size_t i = 0; i < j; ++i) {
      c -= out[i].second * Rat(indicator_at(i, j));
    }
    c /= Rat(diag);
    out.emplace_back(f.entries[j].first, c);
  }
  return out;
}

}  // namespace eulerk
