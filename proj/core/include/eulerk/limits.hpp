#pragma once

namespace eulerk {

/// Resource caps for group construction and homomorphism searches.
///
/// The defaults keep every worst-case search interactive: groups may be
/// built up to order 36, and homomorphism enumeration accepts pairs with
/// both sides of order at most 24. Verification suites that need larger
/// pairs pass their own Limits.
struct Limits {
  int max_order = 36;       // cap on constructed group order
  int max_hom_order = 24;   // per-side cap for hom enumeration
  long long max_hom_search = 50'000'000;  // projected generator-image tuples

  static const Limits& defaults() {
    static const Limits l{};
    return l;
  }
};

}  // namespace eulerk
