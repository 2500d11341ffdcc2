#pragma once

#include <map>
#include <set>
#include <string>

#include "eulerk/basis.hpp"
#include "eulerk/limits.hpp"
#include "eulerk/rational.hpp"
#include "eulerk/space.hpp"

namespace eulerk {

/// A finitely supported integer combination of basis elements. Zero
/// coefficients are never stored; isomorphic leaf groups merge because
/// keys are canonical.
class K0Class {
 public:
  K0Class() = default;

  long long coefficient(const BasisElement& element) const;
  void add(const BasisElement& element, long long delta);

  K0Class& operator+=(const K0Class& rhs);
  K0Class& operator-=(const K0Class& rhs);
  K0Class operator+(const K0Class& rhs) const;
  K0Class operator-(const K0Class& rhs) const;

  bool operator==(const K0Class& rhs) const { return coef_ == rhs.coef_; }
  bool is_zero() const { return coef_.empty(); }

  const std::map<BasisElement, long long>& terms() const { return coef_; }

  /// "2[*] - [B C2]": positive terms first, then negative, each group of
  /// terms in basis order; "0" for the zero class.
  std::string render() const;

 private:
  std::map<BasisElement, long long> coef_;
};

/// Decomposes an expression in the basis. Every BG leaf must be
/// nilpotent: such a leaf with Sylow subgroups G_1..G_k contributes
/// [B G_1] + ... + [B G_k] - (k-1)[*]. Throws NonNilpotentError otherwise.
K0Class k0_class(const SpaceExpr& expr,
                 const Limits& limits = Limits::defaults());

/// Primes whose basis elements appear in k0_class(expr) with nonzero
/// coefficient.
std::set<int> torsion_support(const SpaceExpr& expr,
                              const Limits& limits = Limits::defaults());

/// Pairing of a class against basis values: the sum of coefficient *
/// value over the support. Throws MissingValueError when a needed value
/// is absent.
Rat pair(const K0Class& cls, const BasisAssignment& values);

}  // namespace eulerk
