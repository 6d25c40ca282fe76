#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perispline {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // failure diagnostics; empty on pass
};

/// Runs the twelve verification criteria in order, streaming one line per
/// criterion to `progress` when given. Criterion 12 aggregates the others,
/// re-runs a small report pipeline twice for byte-level determinism, and
/// checks the total wall time stays under 120 s.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

}  // namespace perispline
