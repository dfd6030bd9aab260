#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "scsort/error.hpp"
#include "scsort/machine.hpp"
#include "scsort/report_io.hpp"

using namespace scsort;

namespace {

const Pattern3 p123(1, 2, 3);
const Pattern3 p213(2, 1, 3);

std::vector<int> values_of(const MachineTrace& t, EventKind kind) {
  std::vector<int> v;
  for (const auto& e : t.events) {
    if (e.kind == kind) v.push_back(e.value);
  }
  return v;
}

// Every structural property a trace must satisfy.
void check_trace(const MachineTrace& t) {
  const int n = t.input.size();
  int pushes = 0;
  int last_push = 0;
  int first_drain = 0;
  std::vector<int> pops;
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const auto& e = t.events[i];
    REQUIRE(e.step == static_cast<int>(i) + 1);
    if (e.kind == EventKind::Push) {
      ++pushes;
      last_push = e.step;
    } else {
      pops.push_back(e.value);
      if (e.kind == EventKind::DrainPop && first_drain == 0) first_drain = e.step;
    }
  }
  REQUIRE(pushes == n);
  REQUIRE(static_cast<int>(pops.size()) == n);
  REQUIRE((first_drain == 0 || first_drain > last_push));
  for (const auto& e : t.events) {
    if (e.kind == EventKind::SigmaPop) REQUIRE(e.step < last_push);
  }
  const auto out = t.output.entries();
  REQUIRE(std::equal(pops.begin(), pops.end(), out.begin(), out.end()));
  REQUIRE(t.cro() <= std::max(0, n - 2));
}

}  // namespace

TEST_CASE("sc_map worked examples") {
  CHECK(sc_map(p213, Permutation{5, 2, 4, 1, 3}) == Permutation{2, 1, 3, 4, 5});
  CHECK(sc_map(p123, Permutation{1}) == Permutation{1});
  CHECK(sc_map(p123, Permutation{1, 2}) == Permutation{2, 1});
  CHECK(sc_map(p123, Permutation{3, 2, 1}) == Permutation{2, 1, 3});
  for (const auto& sigma : Pattern3::all()) {
    CHECK(sc_map(sigma, Permutation{1, 2}) == Permutation{2, 1});
    CHECK(sc_map(sigma, Permutation{2, 1}) == Permutation{1, 2});
  }
}

TEST_CASE("sc_trace worked examples") {
  const auto fig = sc_trace(p213, Permutation{5, 2, 4, 1, 3});
  std::vector<int> pops;
  for (const auto& e : fig.events) {
    if (e.is_pop()) pops.push_back(e.value);
  }
  CHECK(pops == std::vector<int>{2, 1, 3, 4, 5});
  CHECK(values_of(fig, EventKind::SigmaPop) == std::vector<int>{2, 1});

  const auto two = sc_trace(p123, Permutation{1, 2});
  const std::vector<MachineEvent> expected{{EventKind::Push, 1, 1},
                                           {EventKind::Push, 2, 2},
                                           {EventKind::DrainPop, 2, 3},
                                           {EventKind::DrainPop, 1, 4}};
  CHECK(two.events == expected);

  CHECK(values_of(sc_trace(p123, Permutation{3, 2, 1}), EventKind::SigmaPop) ==
        std::vector<int>{2});
}

TEST_CASE("cro") {
  CHECK(cro(p213, Permutation{5, 2, 4, 1, 3}) == 2);
  CHECK(cro(p123, Permutation{3, 2, 1}) == 1);
  for (const auto& sigma : Pattern3::all()) {
    CHECK(cro(sigma, Permutation{1}) == 0);
    CHECK(cro(sigma, Permutation{1, 2}) == 0);
    CHECK(cro(sigma, Permutation{2, 1}) == 0);
  }
}

TEST_CASE("combination_view") {
  const auto fig = sc_trace(p213, Permutation{5, 2, 4, 1, 3});
  CHECK(combination_view(fig, 2).entries == std::vector<int>{5, 4, 3});
  CHECK(combination_view(fig, 0).entries == std::vector<int>{5, 2, 4, 1, 3});
  CHECK(combination_view(fig, 5).entries.empty());
  CHECK(combination_view(sc_trace(p123, Permutation{3, 2, 1}), 1).entries ==
        std::vector<int>{3, 1});
  CHECK_THROWS_AS(combination_view(fig, 6), InvalidInput);
  CHECK_THROWS_AS(combination_view(fig, -1), InvalidInput);
}

TEST_CASE("trace serialization") {
  const auto text = serialize_trace(sc_trace(p213, Permutation{5, 2, 4, 1, 3}));
  CHECK(text ==
        "PUSH 5\nPUSH 2\nPOP_SIGMA 2\nPUSH 4\nPUSH 1\nPOP_SIGMA 1\nPUSH 3\n"
        "POP_DRAIN 3\nPOP_DRAIN 4\nPOP_DRAIN 5\nOUTPUT 21345\nCRO 2\n");
  const auto json = trace_to_json(sc_trace(p123, Permutation{1, 2}));
  CHECK(json.find("\"output\": \"21\"") != std::string::npos);
  CHECK(json.find("\"drain_pop\"") != std::string::npos);
}

TEST_CASE("machine agrees with the reference machine, exhaustive n <= 7") {
  for (const auto& sigma : Pattern3::all()) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& v : oracle::all_perms(n)) {
        const Permutation tau(v);
        const auto ref = oracle::run(sigma, v);
        const auto t = sc_trace(sigma, tau);
        REQUIRE(oracle::seq(t.output) == ref.output);
        REQUIRE(values_of(t, EventKind::SigmaPop) == ref.sigma_pops);
      }
    }
  }
}

TEST_CASE("structural invariants, exhaustive n <= 7") {
  for (const auto& sigma : Pattern3::all()) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& v : oracle::all_perms(n)) {
        const Permutation tau(v);
        const auto t = sc_trace(sigma, tau);
        check_trace(t);
        // last output entry is the first input entry
        REQUIRE(t.output[n] == tau[1]);
        // CRO = 0 exactly when the output is the reverse
        REQUIRE((t.cro() == 0) == (t.output == reverse(tau)));
        // complement equivariance
        REQUIRE(sc_map(sigma.complement(), complement(tau)) == complement(t.output));
      }
    }
  }
}

TEST_CASE("post-CRO suffix is the reversed combination, exhaustive n <= 6") {
  for (const auto& sigma : Pattern3::all()) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& v : oracle::all_perms(n)) {
        const auto t = sc_trace(sigma, Permutation(v));
        const int k = t.cro();
        auto comb = combination_view(t, k).entries;
        std::reverse(comb.begin(), comb.end());
        const auto suffix = t.output.entries().subspan(static_cast<std::size_t>(k));
        REQUIRE(std::equal(suffix.begin(), suffix.end(), comb.begin(), comb.end()));
      }
    }
  }
}

TEST_CASE("random traces up to n = 20 are well formed and deterministic") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& sigma = Pattern3::all()[trial % 6];
    const auto v = oracle::random_perm(rng, 1 + trial % 20);
    const Permutation tau(v);
    const auto t = sc_trace(sigma, tau);
    check_trace(t);
    CHECK(t == sc_trace(sigma, tau));
    CHECK(sc_map(sigma, tau) == t.output);
    CHECK(cro(sigma, tau) == t.cro());
    CHECK(oracle::seq(t.output) == oracle::run(sigma, v).output);
  }
}
