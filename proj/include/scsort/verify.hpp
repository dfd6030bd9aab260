#pragma once

#include <optional>
#include <string>
#include <vector>

namespace scsort {

struct ClaimResult {
  std::string claim_id;
  std::string scope;
  bool passed = false;
  // Present exactly when the claim failed.
  std::optional<std::string> counterexample;
};

// Identifiers in report order.
const std::vector<std::string>& claim_ids();

// Evaluates the selected claims (all when `selection` is empty) with
// exhaustive sweeps over permutation lengths up to max_n (3..9). Results come
// back in claim_ids() order whatever order the selection names them in.
std::vector<ClaimResult> run_claims(int max_n, const std::vector<std::string>& selection = {});

bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace scsort
