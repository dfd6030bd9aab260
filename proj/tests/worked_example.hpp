#pragma once

// Worked example SC_213(52413): shared by the acceptance suite and the
// mutation probe so both evaluate the identical check.

#include <string>
#include <vector>

#include "scsort/machine.hpp"

namespace acceptance {

struct Verdict {
  bool pass;
  std::string detail;
};

inline Verdict check_worked_example() {
  using namespace scsort;
  const auto t = sc_trace(Pattern3(2, 1, 3), Permutation{5, 2, 4, 1, 3});
  std::vector<int> sigma_pops;
  for (const auto& e : t.events) {
    if (e.kind == EventKind::SigmaPop) sigma_pops.push_back(e.value);
  }
  const bool ok = t.output == Permutation{2, 1, 3, 4, 5} && t.cro() == 2 &&
                  sigma_pops == std::vector<int>{2, 1} &&
                  sc_map(Pattern3(2, 1, 3), Permutation{5, 2, 4, 1, 3}) == t.output;
  std::string detail = "output " + t.output.to_string() + ", CRO " + std::to_string(t.cro());
  return {ok, detail};
}

}  // namespace acceptance
