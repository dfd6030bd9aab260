#pragma once

#include <span>
#include <string>
#include <vector>

#include "scsort/permutation.hpp"

namespace scsort {

enum class EventKind { Push, SigmaPop, DrainPop };

struct MachineEvent {
  EventKind kind;
  int value;
  int step;  // 1-based ordinal within the trace

  bool is_pop() const { return kind != EventKind::Push; }
  bool operator==(const MachineEvent&) const = default;
};

struct MachineTrace {
  Pattern3 sigma;
  Permutation input;
  Permutation output;
  std::vector<MachineEvent> events;

  int cro() const;
  int pop_count() const;
  bool operator==(const MachineTrace&) const = default;
};

// Remaining input stacked on top of the current stack, read bottom to top.
struct CombinationView {
  std::vector<int> entries;
  bool operator==(const CombinationView&) const = default;
};

// SC_sigma. The next input entry x is compared with the top two stack entries:
// while standardize(x, top, second) == sigma the top is popped to the output;
// otherwise x is pushed. Once the input is exhausted the stack drains top first.
Permutation sc_map(const Pattern3& sigma, const Permutation& tau);

MachineTrace sc_trace(const Pattern3& sigma, const Permutation& tau);

// Number of pops forced by the pattern condition (drain pops excluded).
int cro(const Pattern3& sigma, const Permutation& tau);

// State after `after_pops` pops. Pushes do not change the combination, so
// the view is well defined between consecutive pops.
CombinationView combination_view(const MachineTrace& trace, int after_pops);

// `PUSH v` / `POP_SIGMA v` / `POP_DRAIN v` lines, then `OUTPUT <perm>` and
// `CRO <k>`, each newline terminated.
std::string serialize_trace(const MachineTrace& trace);

namespace detail {

// Allocation-free kernel used by the enumeration engine. `out` and `stack`
// must hold at least in.size() entries. Returns the CRO count. The values in
// `in` need not be 1..n, only distinct.
int run_machine(const Pattern3& sigma, std::span<const int> in, std::span<int> out,
                std::span<int> stack);

}  // namespace detail

}  // namespace scsort
