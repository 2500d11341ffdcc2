// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <string>
#include <vector>

#include "eulerk/verify.hpp"

int main() {
  using eulerk::VerifyReport;
  struct Criterion {
    const char* label;
    double budget_seconds;
    VerifyReport (*run)(const eulerk::Limits&);
  };
  const eulerk::Limits limits;
  const std::vector<Criterion> criteria = {
      {"1 golden-values (chi(B C_pq) = 1/p + 1/q - 1)", 1.0,
       eulerk::verify_golden_values},
      {"2 delta-oracle (indicator = injective-class count)", 300.0,
       eulerk::verify_delta_oracle},
      {"3 factorization (rep = sum of mono over quotients)", 300.0,
       eulerk::verify_factorization},
      {"4 reconstruction (triangular solve reproduces values)", 60.0,
       eulerk::verify_reconstruction},
      {"5 assembly (assembled = leafwise = pairing)", 120.0,
       eulerk::verify_assembly},
      {"6 suspension (chi(S^n) = 1 + (-1)^n)", 60.0,
       eulerk::verify_suspension},
      {"7 fibration-failure (chi(BC6) != chi(BC2)chi(BC3))", 60.0,
       eulerk::verify_fibration_failure},
      {"8 wall (2 chi(BC2 v BC3) = chi(BC3 v BC3))", 60.0,
       eulerk::verify_wall},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    VerifyReport report;
    std::string error;
    try {
      report = criterion.run(limits);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool in_budget = report.seconds <= criterion.budget_seconds;
    const bool ok = error.empty() && report.pass && in_budget;
    if (!ok) ++failures;
    std::printf("[%s] criterion %s  (%lld checks, %.2fs)\n",
                ok ? "PASS" : "FAIL", criterion.label, report.checks,
                report.seconds);
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    if (!report.counterexample.empty()) {
      std::printf("       counterexample: %s\n",
                  report.counterexample.c_str());
    }
    if (!in_budget && error.empty()) {
      std::printf("       over time budget of %.0fs\n",
                  criterion.budget_seconds);
    }
  }
  if (failures == 0) {
    std::printf("all 8 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
