#pragma once

// The compiled-in acceptance suite: one exact check per criterion, shared by
// `fano-walls verify` and the acceptance test binary.

#include <iosfwd>
#include <string>
#include <vector>

namespace fanowalls::cli {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Failure reasons, or a short summary of what was verified.
  std::string detail;
  double seconds = 0;
};

std::vector<CheckResult> run_acceptance();

/// One line per check; returns true when every check passed.
bool print_results(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace fanowalls::cli
