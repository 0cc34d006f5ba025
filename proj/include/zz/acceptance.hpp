#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zz {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  long long ms = 0;
};

struct AcceptanceOptions {
  bool include_slow = false; // adds the 2I sweep to criterion 15
};

// Runs the full acceptance suite (criteria 1..16), invoking the callback
// after each criterion when given.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opt = {},
    const std::function<void(const CriterionResult&)>& progress = {});

} // namespace zz
