#include "eulerk/k0.hpp"

#include "eulerk/error.hpp"

namespace eulerk {

long long K0Class::coefficient(const BasisElement& element) const {
  auto it = coef_.find(element);
  return it == coef_.end() ? 0 : it->second;
}

void K0Class::add(const BasisElement& element, long long delta) {
  if (delta == 0) return;
  auto [it, inserted] = coef_.emplace(element, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) coef_.erase(it);
  }
}

K0Class& K0Class::operator+=(const K0Class& rhs) {
  for (const auto& [elem, c] : rhs.coef_) add(elem, c);
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& rhs) {
  for (const auto& [elem, c] : rhs.coef_) add(elem, -c);
  return *this;
}

K0Class K0Class::operator+(const K0Class& rhs) const {
  K0Class out = *this;
  out += rhs;
  return out;
}

K0Class K0Class::operator-(const K0Class& rhs) const {
  K0Class out = *this;
  out -= rhs;
  return out;
}

std::string K0Class::render() const {
  if (coef_.empty()) return "0";
  auto term = [](const BasisElement& elem, long long c) {
    std::string body =
        elem.is_star() ? "[*]" : "[B " + elem.display_name() + "]";
    long long mag = c < 0 ? -c : c;
    return mag == 1 ? body : std::to_string(mag) + body;
  };
  std::string out;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& [elem, c] : coef_) {
      if ((pass == 0) != (c > 0)) continue;
      if (out.empty()) {
        out += (c < 0 ? "-" : "") + term(elem, c);
      } else {
        out += (c < 0 ? " - " : " + ") + term(elem, c);
      }
    }
  }
  return out;
}

namespace {

K0Class leaf_class(const FiniteGroup& g, const Limits& limits) {
  (void)limits;
  K0Class out;
  if (g.order() == 1) {
    out.add(BasisElement::star(), 1);
    return out;
  }
  const SylowDecomposition syl = sylow_decomposition(g);
  if (!syl.nilpotent) {
    throw NonNilpotentError("leaf group '" + g.name() +
                            "' is not nilpotent; its class has no "
                            "per-prime decomposition");
  }
  long long parts = 0;
  for (const auto& [p, sub] : syl.sylow) {
    (void)p;
    out.add(BasisElement::p_group(sub), 1);
    ++parts;
  }
  out.add(BasisElement::star(), -(parts - 1));
  return out;
}

K0Class class_rec(const SpaceExpr& expr, const Limits& limits) {
  switch (expr.kind()) {
    case SpaceExpr::Kind::Empty:
      return K0Class();
    case SpaceExpr::Kind::Point: {
      K0Class out;
      out.add(BasisElement::star(), 1);
      return out;
    }
    case SpaceExpr::Kind::BG:
      return leaf_class(expr.group(), limits);
    case SpaceExpr::Kind::Pushout:
      return class_rec(expr.children()[1], limits) +
             class_rec(expr.children()[2], limits) -
             class_rec(expr.children()[0], limits);
    default:
      return class_rec(expr.desugared(), limits);
  }
}

}  // namespace

K0Class k0_class(const SpaceExpr& expr, const Limits& limits) {
  return class_rec(expr.desugared(), limits);
}

std::set<int> torsion_support(const SpaceExpr& expr, const Limits& limits) {
  std::set<int> out;
  const K0Class cls = k0_class(expr, limits);
  for (const auto& [elem, c] : cls.terms()) {
    (void)c;
    if (!elem.is_star()) out.insert(elem.prime());
  }
  return out;
}

Rat pair(const K0Class& cls, const BasisAssignment& values) {
  Rat out;
  for (const auto& [elem, c] : cls.terms()) {
    out += Rat(c) * values.require(elem);
  }
  return out;
}

}  // namespace eulerk
