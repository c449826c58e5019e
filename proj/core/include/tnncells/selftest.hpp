#pragma once

// Built-in verification suites, shared by the CLI selftest and verify-adjoint
// commands.  Each check reports a name and a pass flag through the callback;
// suites return overall success.

#include <functional>
#include <string>

namespace tnncells::selftest {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // empty when passing
};

using Reporter = std::function<void(const CheckResult&)>;

// The adjoint representation suite (generator tables, cone relations, family
// supports, beta partitions, cross-oracle equivalence over all disjoint
// pieces).  corrupt_support_table injects a deliberate table fault so the
// negative path of the verification pipeline can be exercised.
bool run_adjoint_checks(const Reporter& report, bool corrupt_support_table = false);

// quick: exhaustive suites on the two smallest contexts.
bool run_quick(const Reporter& report);
// full: quick plus larger-rank property suites and sampling harnesses.
bool run_full(const Reporter& report);

}  // namespace tnncells::selftest
