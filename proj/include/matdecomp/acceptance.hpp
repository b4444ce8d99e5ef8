#pragma once

// The eight acceptance checks, shared by the acceptance binary and `matdecomp selftest`.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace matdecomp::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool passed() const { return correct && seconds <= limit_seconds; }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<bool(std::string& detail)> check;
};

const std::vector<Criterion>& criteria();

CriterionResult run(const Criterion& c);

/// Runs every criterion whose id is in `only` (all when empty), printing one line each.
/// Returns true when all of them pass.
bool run_all(std::ostream& out, const std::vector<int>& only = {});

}  // namespace matdecomp::acceptance
