#pragma once

// The nine acceptance criteria as runnable checks, shared by the acceptance
// test binary and `collapse reproduce`.

#include <functional>
#include <string>
#include <vector>

namespace collapse::acceptance {

inline constexpr int kCriterionCount = 9;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// One line of measured facts.
  std::string detail;
  /// Further lines, e.g. unfired branches.
  std::vector<std::string> notes;
  double seconds = 0.0;
};

struct Options {
  int threads = 1;
};

/// Throws Error unless 1 <= id <= kCriterionCount.
CriterionResult run_criterion(int id, const Options& opt);

/// Runs every criterion in order, reporting each as it finishes.
std::vector<CriterionResult> run_all(const Options& opt,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  title  (detail)  0.12s"
std::string format_line(const CriterionResult& r);

}  // namespace collapse::acceptance
