#pragma once

#include <string>
#include <vector>

#include "eulerk/group.hpp"
#include "eulerk/limits.hpp"

namespace eulerk {

/// Outcome of one verification suite run.
struct VerifyReport {
  std::string suite;
  bool pass = false;
  long long checks = 0;
  std::string summary;         // one or more human-readable result lines
  std::string counterexample;  // first failing case, empty when pass
  double seconds = 0.0;
};

/// Suites reachable from the command line.
const std::vector<std::string>& verify_suite_names();

/// Runs a named suite; throws InvalidInputError for unknown names.
VerifyReport run_verify_suite(const std::string& name,
                              const Limits& limits = Limits::defaults());

VerifyReport verify_golden_values(const Limits& limits = Limits::defaults());
VerifyReport verify_delta_oracle(const Limits& limits = Limits::defaults());
VerifyReport verify_factorization(const Limits& limits = Limits::defaults());
VerifyReport verify_reconstruction(const Limits& limits = Limits::defaults());
VerifyReport verify_assembly(const Limits& limits = Limits::defaults());
VerifyReport verify_suspension(const Limits& limits = Limits::defaults());
VerifyReport verify_fibration_failure(
    const Limits& limits = Limits::defaults());
VerifyReport verify_wall(const Limits& limits = Limits::defaults());

/// Every isomorphism class expressible in the catalog grammar with order
/// at most max_order, one representative each, sorted by (order,
/// canonical key). Deduplication is by canonical key.
std::vector<FiniteGroup> catalog_groups_up_to(
    int max_order, const Limits& limits = Limits::defaults());

/// The p-groups among catalog_groups_up_to(max_order).
std::vector<FiniteGroup> catalog_p_groups(
    int prime, int max_order, const Limits& limits = Limits::defaults());

}  // namespace eulerk
