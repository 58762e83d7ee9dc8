// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds. Each criterion aggregates the named library checks it relies on, so
// a failure prints which sub-check broke and how.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "exhall/verify.hpp"

using namespace exhall;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

void report(const Criterion& crit, int& failed) {
  std::printf("CRITERION %2d %s  %s\n", crit.number, crit.pass() ? "PASS" : "FAIL",
              crit.name.c_str());
  if (crit.pass()) return;
  ++failed;
  for (const CheckResult& c : crit.checks)
    if (!c.pass) std::printf("    - %s: %s\n", c.name.c_str(), c.detail.c_str());
}

}  // namespace

int main() {
  try {
    const VerifyContext ctx = VerifyContext::make();
    int failed = 0;

    report({1,
            "a3-multiplication-table",
            {check_a3_products(ctx.a3, 2), check_a3_products(ctx.a3, 3)}},
           failed);
    report({2,
            "lattice-counts",
            {check_lattice_count(ctx.a3, "a3", 8),
             check_lattice_count(ctx.disjoint, "disjoint-a2", 4)}},
           failed);
    report({3, "k0-presentations", {check_k0_presentations(ctx.a3)}}, failed);
    report({4, "cone-duality", {check_cone_duality(ctx.a3)}}, failed);
    report({5, "degeneration-tables", {check_degenerations(ctx.a3, 2, 4)}}, failed);
    report({6,
            "pbw-endpoint",
            {check_pbw_endpoint(ctx.a2, "a2", 2, 4), check_pbw_endpoint(ctx.a3, "a3", 2, 4)}},
           failed);
    report({7,
            "ext-count-totals",
            {check_ext_totals(ctx.a2, "a2", 5), check_ext_totals(ctx.a3, "a3", 5)}},
           failed);
    report({8,
            "associativity",
            {check_associativity_all(ctx.a2, "a2", 2, 4),
             check_associativity_all(ctx.a3, "a3", 2, 4),
             check_associativity_all(ctx.disjoint, "disjoint-a2", 2, 4)}},
           failed);
    report({9, "disjoint-relabeling", {check_disjoint_relabeling(ctx.disjoint, 4)}}, failed);
    report({10,
            "defect-identities",
            {check_defect_identities(ctx.a2, "a2", 2, 5),
             check_defect_identities(ctx.a3, "a3", 2, 5),
             check_defect_identities(ctx.disjoint, "disjoint-a2", 2, 5)}},
           failed);

    std::printf("ACCEPTANCE: %d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 1;
  }
}
