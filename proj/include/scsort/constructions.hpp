#pragma once

#include <cstdint>
#include <vector>

#include "scsort/permutation.hpp"

namespace scsort {

// A parameterized witness: target(n) has length n + 1 and fertility
// expected_fertility(n) under sigma, for every n >= min_n.
struct ConstructionFamily {
  Pattern3 sigma;
  int min_n;

  Permutation target(int n) const;
  std::uint64_t expected_fertility(int n) const;
};

// The witness family for sigma:
//   123: n(n-1)...21(n+1)                 fertility n
//   312: 12...(n-1)(n+1)n                 fertility n
//   213: 12...(n-4)(n-2)(n-3)(n-1)n(n+1)  fertility n-1, n >= 6
// and the complements of these for 321, 132 and 231.
ConstructionFamily family(const Pattern3& sigma);

Permutation construct(const Pattern3& sigma, int n);

// The explicit preimage list of construct(sigma, n), sorted lexicographically.
std::vector<Permutation> construct_preimages(const Pattern3& sigma, int n);

// A permutation whose fertility under sigma is exactly f, for any f >= 1.
Permutation small_witness(const Pattern3& sigma, int f);

}  // namespace scsort
