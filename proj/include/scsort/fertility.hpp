#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "scsort/machine.hpp"
#include "scsort/permutation.hpp"

namespace scsort {

// Default bound on n for any operation that enumerates S_n (11! ~ 4e7 runs).
inline constexpr int kEnumerationLimit = 11;

// Spectrum keeps one counter per element of S_n, so it is capped even when
// forced (12! counters already need ~1.9 GB).
inline constexpr int kSpectrumHardLimit = 12;

struct EnumerationOptions {
  // Enumerate only tau with tau_1 equal to the target's last entry. The last
  // output entry is always the first input entry, so this never loses a
  // preimage.
  bool use_pruning = true;
  // Lift the kEnumerationLimit guard.
  bool force = false;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

struct FertilityReport {
  Pattern3 sigma;
  Permutation target;
  std::uint64_t count = 0;
  // Lexicographically sorted when present.
  std::optional<std::vector<Permutation>> preimages;
};

// Every tau in S_n with sc_map(sigma, tau) == target, sorted.
FertilityReport preimages(const Pattern3& sigma, const Permutation& target,
                          const EnumerationOptions& options = {});

// |SC_sigma^{-1}(target)|; zero when target is not in the image.
std::uint64_t fertility(const Pattern3& sigma, const Permutation& target,
                        const EnumerationOptions& options = {});

// Fertility of every permutation in S_n, from one forward sweep over S_n.
class SpectrumTable {
 public:
  SpectrumTable(Pattern3 sigma, int n, std::vector<std::uint32_t> counts_by_rank);

  const Pattern3& sigma() const { return sigma_; }
  int n() const { return n_; }

  std::uint64_t fertility_of(const Permutation& p) const;

  // Indexed by lexicographic rank in S_n.
  const std::vector<std::uint32_t>& counts_by_rank() const { return counts_; }

  // fertility value -> number of permutations with that fertility (zero included).
  const std::map<std::uint64_t, std::uint64_t>& histogram() const { return histogram_; }

  std::uint64_t total() const;

 private:
  Pattern3 sigma_;
  int n_;
  std::vector<std::uint32_t> counts_;
  std::map<std::uint64_t, std::uint64_t> histogram_;
};

SpectrumTable spectrum(const Pattern3& sigma, int n, const EnumerationOptions& options = {});

}  // namespace scsort
