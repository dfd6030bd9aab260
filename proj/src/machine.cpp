#include "scsort/machine.hpp"

#include <algorithm>

#include "scsort/error.hpp"

namespace scsort {

namespace {

// The pending entry reads as the top of the stack-to-be, so the triple is
// (pending, top, second from top).
inline bool pattern_pop(const Pattern3& sigma, int pending, int top, int second) {
#ifdef SCSORT_MUTATE_INVERT_POP
  // Test-only build: inverted condition, used to show the checks are not vacuous.
  return !sigma.matches(pending, top, second);
#else
  return sigma.matches(pending, top, second);
#endif
}

// Shared driver; `sink(kind, value)` observes every event.
template <class Sink>
void drive(const Pattern3& sigma, std::span<const int> in, std::span<int> stack, Sink&& sink) {
  std::size_t depth = 0;
  for (int x : in) {
    while (depth >= 2 && pattern_pop(sigma, x, stack[depth - 1], stack[depth - 2])) {
      sink(EventKind::SigmaPop, stack[--depth]);
    }
    stack[depth++] = x;
    sink(EventKind::Push, x);
  }
  while (depth > 0) sink(EventKind::DrainPop, stack[--depth]);
}

}  // namespace

int MachineTrace::cro() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [](const MachineEvent& e) {
    return e.kind == EventKind::SigmaPop;
  }));
}

int MachineTrace::pop_count() const {
  return static_cast<int>(
      std::count_if(events.begin(), events.end(), [](const MachineEvent& e) { return e.is_pop(); }));
}

namespace detail {

int run_machine(const Pattern3& sigma, std::span<const int> in, std::span<int> out,
                std::span<int> stack) {
  std::size_t written = 0;
  int sigma_pops = 0;
  drive(sigma, in, stack, [&](EventKind kind, int value) {
    if (kind == EventKind::Push) return;
    if (kind == EventKind::SigmaPop) ++sigma_pops;
    out[written++] = value;
  });
  return sigma_pops;
}

}  // namespace detail

Permutation sc_map(const Pattern3& sigma, const Permutation& tau) {
  std::vector<int> out(tau.size());
  std::vector<int> stack(tau.size());
  detail::run_machine(sigma, tau.entries(), out, stack);
  return Permutation(std::move(out));
}

MachineTrace sc_trace(const Pattern3& sigma, const Permutation& tau) {
  std::vector<MachineEvent> events;
  events.reserve(2 * static_cast<std::size_t>(tau.size()));
  std::vector<int> out;
  out.reserve(tau.size());
  std::vector<int> stack(tau.size());
  drive(sigma, tau.entries(), stack, [&](EventKind kind, int value) {
    events.push_back({kind, value, static_cast<int>(events.size()) + 1});
    if (kind != EventKind::Push) out.push_back(value);
  });
  return MachineTrace{sigma, tau, Permutation(std::move(out)), std::move(events)};
}

int cro(const Pattern3& sigma, const Permutation& tau) {
  std::vector<int> out(tau.size());
  std::vector<int> stack(tau.size());
  return detail::run_machine(sigma, tau.entries(), out, stack);
}

CombinationView combination_view(const MachineTrace& trace, int after_pops) {
  const int total = trace.pop_count();
  if (after_pops < 0 || after_pops > total) {
    throw InvalidInput("after_pops " + std::to_string(after_pops) + " outside 0.." +
                       std::to_string(total));
  }
  std::vector<int> stack;
  int pushed = 0;
  int popped = 0;
  for (const auto& e : trace.events) {
    if (popped == after_pops) break;
    if (e.kind == EventKind::Push) {
      stack.push_back(e.value);
      ++pushed;
    } else {
      stack.pop_back();
      ++popped;
    }
  }
  auto rest = trace.input.entries().subspan(static_cast<std::size_t>(pushed));
  stack.insert(stack.end(), rest.begin(), rest.end());
  return CombinationView{std::move(stack)};
}

std::string serialize_trace(const MachineTrace& trace) {
  std::string out;
  for (const auto& e : trace.events) {
    switch (e.kind) {
      case EventKind::Push: out += "PUSH "; break;
      case EventKind::SigmaPop: out += "POP_SIGMA "; break;
      case EventKind::DrainPop: out += "POP_DRAIN "; break;
    }
    out += std::to_string(e.value);
    out += '\n';
  }
  out += "OUTPUT " + trace.output.to_string() + "\n";
  out += "CRO " + std::to_string(trace.cro()) + "\n";
  return out;
}

}  // namespace scsort
