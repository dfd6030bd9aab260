#include "scsort/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

#include "scsort/constructions.hpp"
#include "scsort/error.hpp"
#include "scsort/fertility.hpp"
#include "scsort/machine.hpp"
#include "scsort/permutation.hpp"

namespace scsort {

namespace {

using Outcome = std::optional<std::string>;

struct Claim {
  std::string id;
  std::function<std::string(int)> scope;
  std::function<Outcome(int)> check;
};

// Stops at the first permutation for which fn returns a counterexample.
Outcome sweep(int n, const std::function<Outcome(const Permutation&)>& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    if (auto bad = fn(Permutation(v))) return bad;
  } while (std::next_permutation(v.begin(), v.end()));
  return std::nullopt;
}

Outcome sweep_all(int max_n, const std::function<Outcome(const Pattern3&, const Permutation&)>& fn) {
  for (const auto& sigma : Pattern3::all()) {
    for (int n = 1; n <= max_n; ++n) {
      if (auto bad = sweep(n, [&](const Permutation& tau) { return fn(sigma, tau); })) return bad;
    }
  }
  return std::nullopt;
}

std::string join(const std::vector<Permutation>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string();
  }
  return out + "}";
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string case_of(const Pattern3& sigma, const Permutation& p) {
  return "sigma=" + sigma.to_string() + " tau=" + p.to_string();
}

Outcome figure1(int) {
  const Pattern3 sigma(2, 1, 3);
  const Permutation tau{5, 2, 4, 1, 3};
  const auto trace = sc_trace(sigma, tau);
  std::vector<int> sigma_pops;
  for (const auto& e : trace.events) {
    if (e.kind == EventKind::SigmaPop) sigma_pops.push_back(e.value);
  }
  const Permutation expected{2, 1, 3, 4, 5};
  if (trace.output != expected) {
    return case_of(sigma, tau) + " observed output " + trace.output.to_string() + " expected " +
           expected.to_string();
  }
  if (trace.cro() != 2 || sigma_pops != std::vector<int>{2, 1}) {
    return case_of(sigma, tau) + " observed sigma pops [" + join(sigma_pops) +
           "] expected [2,1]";
  }
  const auto view = combination_view(trace, 2);
  if (view.entries != std::vector<int>{5, 4, 3}) {
    return case_of(sigma, tau) + " observed combination after 2 pops [" + join(view.entries) +
           "] expected [5,4,3]";
  }
  return std::nullopt;
}

Outcome table_small_213(int) {
  const Pattern3 sigma(2, 1, 3);
  const std::pair<Permutation, std::uint64_t> rows[] = {
      {Permutation{4, 3, 2, 1}, 1},
      {Permutation{1, 2, 4, 3}, 2},
      {Permutation{1, 3, 5, 2, 4}, 3},
      {Permutation{1, 2, 3, 4}, 4},
  };
  for (const auto& [pi, f] : rows) {
    const auto got = fertility(sigma, pi, {.use_pruning = false});
    if (got != f) {
      return "sigma=213 pi=" + pi.to_string() + " observed fertility " + std::to_string(got) +
             " expected " + std::to_string(f);
    }
  }
  return std::nullopt;
}

Outcome lemma1(int max_n) {
  return sweep_all(max_n, [](const Pattern3& sigma, const Permutation& tau) -> Outcome {
    const auto trace = sc_trace(sigma, tau);
    std::vector<int> pops;
    int pushes = 0;
    bool draining = false;
    for (const auto& e : trace.events) {
      if (e.kind == EventKind::Push) {
        ++pushes;
        if (draining) return case_of(sigma, tau) + " push after drain began";
      } else {
        pops.push_back(e.value);
        if (e.kind == EventKind::DrainPop) draining = true;
        if (e.kind == EventKind::SigmaPop && draining) {
          return case_of(sigma, tau) + " sigma pop after drain began";
        }
      }
    }
    const auto out = trace.output.entries();
    if (pushes != tau.size() || !std::equal(pops.begin(), pops.end(), out.begin(), out.end())) {
      return case_of(sigma, tau) + " pop values [" + join(pops) + "] differ from output " +
             trace.output.to_string();
    }
    return std::nullopt;
  });
}

Outcome lemma5(int max_n) {
  return sweep_all(max_n, [](const Pattern3& sigma, const Permutation& tau) -> Outcome {
    const auto pi = sc_map(sigma, tau);
    if (pi[pi.size()] != tau[1]) {
      return case_of(sigma, tau) + " observed output " + pi.to_string() +
             " whose last entry differs from tau_1";
    }
    return std::nullopt;
  });
}

Outcome lemma23(int max_n) {
  return sweep_all(max_n, [](const Pattern3& sigma, const Permutation& tau) -> Outcome {
    const auto trace = sc_trace(sigma, tau);
    const int k = trace.cro();
    const bool reversed = trace.output == reverse(tau);
    if ((k == 0) != reversed) {
      return case_of(sigma, tau) + " observed CRO " + std::to_string(k) + " with output " +
             trace.output.to_string() + (reversed ? " equal to" : " not equal to") + " rev(tau)";
    }
    auto view = combination_view(trace, k).entries;
    std::reverse(view.begin(), view.end());
    const auto suffix = trace.output.entries().subspan(static_cast<std::size_t>(k));
    if (!std::equal(suffix.begin(), suffix.end(), view.begin(), view.end())) {
      return case_of(sigma, tau) + " output suffix after " + std::to_string(k) +
             " sigma pops is not the reversed combination [" + join(view) + "]";
    }
    return std::nullopt;
  });
}

Outcome theorem1(int max_n) {
  return sweep_all(max_n, [](const Pattern3& sigma, const Permutation& tau) -> Outcome {
    const auto lhs = sc_map(sigma.complement(), complement(tau));
    const auto rhs = complement(sc_map(sigma, tau));
    if (lhs != rhs) {
      return case_of(sigma, tau) + " observed SC_comp(sigma)(comp(tau)) = " + lhs.to_string() +
             " expected comp(SC_sigma(tau)) = " + rhs.to_string();
    }
    return std::nullopt;
  });
}

Outcome corollary1(int max_n) {
  for (const auto& sigma : Pattern3::all()) {
    for (int n = 1; n <= max_n; ++n) {
      const auto a = spectrum(sigma, n);
      const auto b = spectrum(sigma.complement(), n);
      if (auto bad = sweep(n, [&](const Permutation& pi) -> Outcome {
            const auto fa = a.fertility_of(pi);
            const auto fb = b.fertility_of(complement(pi));
            if (fa == fb) return std::nullopt;
            return "sigma=" + sigma.to_string() + " pi=" + pi.to_string() + " fertility " +
                   std::to_string(fa) + " but comp(pi) has fertility " + std::to_string(fb) +
                   " under comp(sigma)";
          })) {
        return bad;
      }
    }
  }
  return std::nullopt;
}

// Brute-force preimage set of the family target equals the explicit list.
Outcome family_matches(const Pattern3& sigma, int n) {
  const auto pi = construct(sigma, n);
  const auto report = preimages(sigma, pi);
  const auto expected = construct_preimages(sigma, n);
  const auto want = family(sigma).expected_fertility(n);
  if (report.count != want || *report.preimages != expected) {
    return "sigma=" + sigma.to_string() + " n=" + std::to_string(n) + " pi=" + pi.to_string() +
           " observed " + std::to_string(report.count) + " preimages " + join(*report.preimages) +
           " expected " + std::to_string(want) + " preimages " + join(expected);
  }
  return std::nullopt;
}

Outcome theorem3(int max_n) {
  for (const auto& sigma : {Pattern3(1, 2, 3), Pattern3(3, 2, 1)}) {
    for (int n = 1; n <= max_n - 1; ++n) {
      if (auto bad = family_matches(sigma, n)) return bad;
    }
  }
  return std::nullopt;
}

Outcome theorem4(int max_n) {
  for (const auto& sigma : {Pattern3(3, 1, 2), Pattern3(1, 3, 2)}) {
    for (int n = 1; n <= max_n - 1; ++n) {
      if (auto bad = family_matches(sigma, n)) return bad;
    }
  }
  return std::nullopt;
}

Outcome theorem5(int) {
  for (const auto& sigma : {Pattern3(2, 1, 3), Pattern3(2, 3, 1)}) {
    for (int n : {6, 7}) {
      if (auto bad = family_matches(sigma, n)) return bad;
    }
  }
  return std::nullopt;
}

// The k values popped by the pattern rule keep their input order.
Outcome lemma4_order(int) {
  for (const auto& sigma : {Pattern3(2, 1, 3), Pattern3(2, 3, 1)}) {
    for (int n : {6, 7}) {
      const auto pi = construct(sigma, n);
      const auto report = preimages(sigma, pi);
      for (const auto& tau : *report.preimages) {
        const int k = cro(sigma, tau);
        for (int i = 1; i < k; ++i) {
          if (index_of(tau, pi[i]) >= index_of(tau, pi[i + 1])) {
            return case_of(sigma, tau) + " pi=" + pi.to_string() + " CRO " + std::to_string(k) +
                   " but " + std::to_string(pi[i + 1]) + " precedes " + std::to_string(pi[i]) +
                   " in tau";
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome theorem1_1(int max_n) {
  for (const auto& sigma : Pattern3::all()) {
    for (int f = 1; f <= max_n; ++f) {
      const auto w = small_witness(sigma, f);
      const auto got = fertility(sigma, w);
      if (got != static_cast<std::uint64_t>(f)) {
        return "sigma=" + sigma.to_string() + " witness " + w.to_string() + " observed fertility " +
               std::to_string(got) + " expected " + std::to_string(f);
      }
    }
  }
  return std::nullopt;
}

std::string lengths(int max_n) { return "all six sigma, every tau of length 1.." + std::to_string(max_n); }

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = {
      {"figure1", [](int) { return std::string("SC_213(52413): output, CRO, sigma pops, combination"); },
       figure1},
      {"table_small_213",
       [](int) { return std::string("sigma=213 fertilities of 4321, 1243, 13524, 1234 over S_4/S_5"); },
       table_small_213},
      {"lemma1", lengths, lemma1},
      {"lemma5", lengths, lemma5},
      {"lemma23", lengths, lemma23},
      {"theorem1", lengths, theorem1},
      {"corollary1",
       [](int m) { return "all six sigma, fertility of every pi of length 1.." + std::to_string(m); },
       corollary1},
      {"theorem3",
       [](int m) { return "sigma in {123,321}, n = 1.." + std::to_string(m - 1); }, theorem3},
      {"theorem4",
       [](int m) { return "sigma in {312,132}, n = 1.." + std::to_string(m - 1); }, theorem4},
      {"lemma4_order", [](int) { return std::string("sigma in {213,231}, n = 6, 7"); }, lemma4_order},
      {"theorem5", [](int) { return std::string("sigma in {213,231}, n = 6, 7"); }, theorem5},
      {"theorem1_1",
       [](int m) { return "all six sigma, witness fertility f = 1.." + std::to_string(m); },
       theorem1_1},
  };
  return claims;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& c : registry()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

std::vector<ClaimResult> run_claims(int max_n, const std::vector<std::string>& selection) {
  if (max_n < 3 || max_n > 9) {
    throw InvalidInput("max_n must be in 3..9, got " + std::to_string(max_n));
  }
  for (const auto& id : selection) {
    if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
      throw InvalidInput("unknown claim identifier '" + id + "'");
    }
  }
  std::vector<const Claim*> chosen;
  for (const auto& c : registry()) {
    if (selection.empty() ||
        std::find(selection.begin(), selection.end(), c.id) != selection.end()) {
      chosen.push_back(&c);
    }
  }

  std::vector<std::future<Outcome>> pending;
  for (const Claim* c : chosen) {
    pending.push_back(std::async(std::launch::async, [c, max_n] { return c->check(max_n); }));
  }
  std::vector<ClaimResult> results;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    Outcome bad = pending[i].get();
    results.push_back({chosen[i]->id, chosen[i]->scope(max_n), !bad.has_value(), std::move(bad)});
  }
  return results;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.passed; });
}

}  // namespace scsort
