#pragma once

// Reference implementations used only by tests. They are deliberately naive
// and share no code with the library's fast paths.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "scsort/machine.hpp"
#include "scsort/permutation.hpp"

namespace oracle {

using Seq = std::vector<int>;

// Rank of each entry = 1 + number of strictly smaller entries.
inline Seq standardize(const Seq& s) {
  Seq out;
  for (int x : s) out.push_back(1 + static_cast<int>(std::count_if(s.begin(), s.end(), [&](int y) { return y < x; })));
  return out;
}

inline Seq sigma_seq(const scsort::Pattern3& sigma) { return {sigma[1], sigma[2], sigma[3]}; }

struct Run {
  Seq output;
  Seq sigma_pops;
};

// Direct transcription of the machine rule with an explicit stack vector and
// a full standardization of the (pending, top, second) triple.
inline Run run(const scsort::Pattern3& sigma, const Seq& tau) {
  const Seq pat = sigma_seq(sigma);
  Seq stack;  // back() is the top
  Run r;
  std::size_t next = 0;
  while (next < tau.size()) {
    const int x = tau[next];
    if (stack.size() >= 2 &&
        standardize({x, stack[stack.size() - 1], stack[stack.size() - 2]}) == pat) {
      r.output.push_back(stack.back());
      r.sigma_pops.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    stack.push_back(x);
    ++next;
  }
  while (!stack.empty()) {
    r.output.push_back(stack.back());
    stack.pop_back();
  }
  return r;
}

inline std::vector<Seq> all_perms(int n) {
  Seq v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Seq> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Every tau in S_n, in lexicographic order, whose image is pi.
inline std::vector<Seq> preimages(const scsort::Pattern3& sigma, const Seq& pi) {
  std::vector<Seq> out;
  for (const auto& tau : all_perms(static_cast<int>(pi.size()))) {
    if (run(sigma, tau).output == pi) out.push_back(tau);
  }
  return out;
}

inline Seq seq(const scsort::Permutation& p) { return Seq(p.entries().begin(), p.entries().end()); }

inline Seq random_perm(std::mt19937_64& rng, int n) {
  Seq v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace oracle
