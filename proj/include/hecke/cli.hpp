#pragma once

// Batch front-end: exact counts, census verification, the root/coefficient
// table and the invariant suite behind `verify`.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/group.hpp"
#include "hecke/reciprocal.hpp"

namespace hecke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitBudget = 4;

int exit_code(ErrorCode code);

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Adds `delta` to the recurrence's initial value at the first initial t.
/// Used to check that `verify` notices a broken recurrence.
struct Perturbation {
  long long delta = 0;
};

struct VerifyOptions {
  std::vector<GroupParams> groups;  // empty: k = 3..8
  int t_max = 10;
  int hyperbolic_t_max = 8;
  CensusOptions census;
  std::optional<Perturbation> perturb;
};

struct CheckResult {
  std::string name;
  std::string group;  // k label, plus "/base" where it matters
  bool passed = false;
  std::optional<int> first_bad_t;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* first_failure() const;
};

/// Throws Error(BudgetExceeded) when a census would exceed the word budget.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace hecke::cli
