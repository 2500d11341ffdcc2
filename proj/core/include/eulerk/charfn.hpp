#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eulerk/basis.hpp"
#include "eulerk/k0.hpp"
#include "eulerk/limits.hpp"
#include "eulerk/rational.hpp"
#include "eulerk/space.hpp"

namespace eulerk {

/// Homotopy cardinality from homotopy-group orders listed from degree 1
/// up (degree 0 is 1, the space being connected): the alternating product
/// |pi_2| |pi_4| ... / |pi_1| |pi_3| ....
Rat homotopy_cardinality(const std::vector<long long>& orders_from_pi1);

enum class EvalStrategy { DirectStructural, DeltaCombination, Assembly };

/// A characteristic function: zero on the empty space and additive over
/// pushout squares, f(A) + f(B glued over A with C) = f(B) + f(C). The
/// three strategies share one structural evaluator and differ in how a
/// BG leaf is valued.
class CharFunction {
 public:
  /// Counts homomorphism conjugacy classes out of `probe` on each leaf:
  /// the mapping-class counting characteristic of the probe group.
  static CharFunction chi(FiniteGroup probe,
                          const Limits& limits = Limits::defaults());

  /// Every leaf worth 1: the rational-homology Euler characteristic.
  static CharFunction euler_rational();

  /// The indicator function of `group`: vanishes on every leaf B(H) with
  /// |H| <= |group| and H not isomorphic to `group`, and counts
  /// automorphism conjugacy classes on B(group) itself. Built by a
  /// Möbius-weighted combination of quotient counting functions.
  static CharFunction indicator(FiniteGroup group,
                                const Limits& limits = Limits::defaults());

  /// Linear combination of indicator functions: sum of c * indicator(G)
  /// over the given terms (Star prescriptions use the trivial group).
  static CharFunction delta_combination(
      std::vector<std::pair<Rat, FiniteGroup>> terms,
      const Limits& limits = Limits::defaults());

  /// The unique characteristic function extending the given basis values,
  /// evaluated by per-prime projection and reassembly.
  static CharFunction assembled(BasisAssignment values,
                                const Limits& limits = Limits::defaults());

  /// Same function as `assembled`, evaluated leafwise instead: a
  /// nilpotent leaf with Sylow subgroups G_1..G_k is worth
  /// f(B G_1) + ... + f(B G_k) - (k-1) f(*).
  static CharFunction assembled_leafwise(BasisAssignment values,
                                         const Limits& limits =
                                             Limits::defaults());

  EvalStrategy strategy() const { return strategy_; }
  const std::string& description() const { return description_; }

  /// Exact evaluation; `projected_primes`, when non-null, receives the
  /// primes whose projection the assembly strategy actually computed.
  Rat evaluate(const SpaceExpr& expr,
               std::vector<int>* projected_primes = nullptr) const;

  Rat operator()(const SpaceExpr& expr) const { return evaluate(expr); }

  const std::vector<std::pair<Rat, FiniteGroup>>& delta_terms() const {
    return delta_terms_;
  }

 private:
  CharFunction() = default;

  EvalStrategy strategy_ = EvalStrategy::DirectStructural;
  std::string description_;
  Limits limits_;
  // direct-structural
  std::function<Rat(const FiniteGroup&)> leaf_value_;
  Rat point_value_ = Rat(1);
  // delta-combination
  std::vector<std::pair<Rat, FiniteGroup>> delta_terms_;
  // assembly
  BasisAssignment values_;
};

/// Value on a leaf B(H) of the indicator function of K: the
/// Möbius-alternating sum over the surjection poset of K of hom-class
/// counts out of the quotients. Equals the number of conjugacy classes of
/// injective homomorphisms K -> H. Cached.
long long indicator_on_group(const FiniteGroup& k, const FiniteGroup& h,
                             const Limits& limits = Limits::defaults());

/// Structural evaluation with every leaf worth 1.
Rat rational_euler(const SpaceExpr& expr);

/// Replaces every leaf B(G) by B(Sylow_p G), or by a point when p does
/// not divide |G|. Leaves must be nilpotent.
SpaceExpr complete_at_prime(const SpaceExpr& expr, int p,
                            const Limits& limits = Limits::defaults());

/// f evaluated on the expression completed at p.
Rat project_prime(const CharFunction& f, int p, const SpaceExpr& expr,
                  const Limits& limits = Limits::defaults());

/// Assembly evaluation of basis values on an expression: with e the Star
/// value, e * euler + sum over supporting primes p of (projection at p
/// minus e * euler). Only primes in the torsion support are projected;
/// `projected_primes`, when non-null, records them.
Rat evaluate_assembled(const BasisAssignment& values, const SpaceExpr& expr,
                       const Limits& limits = Limits::defaults(),
                       std::vector<int>* projected_primes = nullptr);

/// Triangular solve for coefficients c_i such that the combination of
/// indicator functions sum c_i * indicator(K_i) takes the prescribed
/// value on each basis leaf (Star prescriptions evaluate on the point).
/// Prescriptions must respect the basis total order.
std::vector<std::pair<BasisElement, Rat>> solve_basis_coefficients(
    const BasisFunction& f, const Limits& limits = Limits::defaults());

}  // namespace eulerk
