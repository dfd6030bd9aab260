#include "scsort/fertility.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "scsort/error.hpp"

namespace scsort {

namespace {

void check_guard(int n, const EnumerationOptions& options, int hard_limit) {
  if (n > hard_limit) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the hard limit of " +
                        std::to_string(hard_limit));
  }
  if (n > kEnumerationLimit && !options.force) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the enumeration guard of " +
                        std::to_string(kEnumerationLimit) + "; pass force to override");
  }
}

// The search space is split into chunks by a fixed prefix. Chunks listed in
// order cover S_n (or the pruned slice of it) in lexicographic order.
std::vector<std::vector<int>> make_chunks(int n, int fixed_first) {
  std::vector<std::vector<int>> chunks;
  if (fixed_first == 0) {
    for (int v = 1; v <= n; ++v) chunks.push_back({v});
    return chunks;
  }
  if (n == 1) return {{fixed_first}};
  for (int w = 1; w <= n; ++w) {
    if (w != fixed_first) chunks.push_back({fixed_first, w});
  }
  return chunks;
}

// Calls visit(tau) for every permutation starting with `prefix`, in
// lexicographic order. `tau` is a reused buffer.
template <class Visit>
void for_each_with_prefix(int n, const std::vector<int>& prefix, Visit&& visit) {
  std::vector<int> tau(prefix);
  std::vector<bool> used(n + 1, false);
  for (int v : prefix) used[v] = true;
  for (int v = 1; v <= n; ++v) {
    if (!used[v]) tau.push_back(v);
  }
  const auto tail = tau.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    visit(std::span<const int>(tau));
  } while (std::next_permutation(tail, tau.end()));
}

unsigned worker_count(const EnumerationOptions& options, int n, std::size_t chunks) {
  if (n <= 7) return 1;  // thread start-up dominates below 8!
  unsigned w = options.workers ? options.workers : std::thread::hardware_concurrency();
  w = std::max(1u, w);
  return static_cast<unsigned>(std::min<std::size_t>(w, chunks));
}

// Runs job(chunk_index) for every chunk across `workers` threads.
template <class Job>
void run_chunks(std::size_t chunks, unsigned workers, Job&& job) {
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) job(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t c = next++; c < chunks; c = next++) job(c);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// Lexicographic rank of a permutation of 1..n given as a span.
std::uint64_t rank_of(std::span<const int> p, const std::vector<std::uint64_t>& fact) {
  const auto n = p.size();
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int v = p[i];
    const std::uint32_t below = used & ((1u << (v - 1)) - 1u);
    r += static_cast<std::uint64_t>(v - 1 - std::popcount(below)) * fact[n - 1 - i];
    used |= 1u << (v - 1);
  }
  return r;
}

struct Search {
  std::vector<std::vector<int>> chunks;
  unsigned workers;
};

Search plan(const Pattern3& sigma, const Permutation& target, const EnumerationOptions& options) {
  (void)sigma;
  const int n = target.size();
  check_guard(n, options, 20);
  const int first = options.use_pruning ? target[n] : 0;
  auto chunks = make_chunks(n, first);
  const unsigned workers = worker_count(options, n, chunks.size());
  return {std::move(chunks), workers};
}

}  // namespace

FertilityReport preimages(const Pattern3& sigma, const Permutation& target,
                          const EnumerationOptions& options) {
  const int n = target.size();
  const Search search = plan(sigma, target, options);
  const auto goal = target.entries();

  std::vector<std::vector<Permutation>> found(search.chunks.size());
  run_chunks(search.chunks.size(), search.workers, [&](std::size_t c) {
    std::vector<int> out(n), stack(n);
    for_each_with_prefix(n, search.chunks[c], [&](std::span<const int> tau) {
      detail::run_machine(sigma, tau, out, stack);
      if (std::equal(out.begin(), out.end(), goal.begin())) {
        found[c].emplace_back(std::vector<int>(tau.begin(), tau.end()));
      }
    });
  });

  std::vector<Permutation> all;
  for (auto& chunk : found) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end());
  for (const auto& tau : all) {
    if (sc_map(sigma, tau) != target) {
      throw std::logic_error("enumeration reported " + tau.to_string() + " which does not map to " +
                             target.to_string());
    }
  }
  FertilityReport report{sigma, target, all.size(), std::nullopt};
  report.preimages = std::move(all);
  return report;
}

std::uint64_t fertility(const Pattern3& sigma, const Permutation& target,
                        const EnumerationOptions& options) {
  const int n = target.size();
  const Search search = plan(sigma, target, options);
  const auto goal = target.entries();

  std::vector<std::uint64_t> counts(search.chunks.size(), 0);
  run_chunks(search.chunks.size(), search.workers, [&](std::size_t c) {
    std::vector<int> out(n), stack(n);
    std::uint64_t hits = 0;
    for_each_with_prefix(n, search.chunks[c], [&](std::span<const int> tau) {
      detail::run_machine(sigma, tau, out, stack);
      hits += std::equal(out.begin(), out.end(), goal.begin()) ? 1 : 0;
    });
    counts[c] = hits;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

SpectrumTable::SpectrumTable(Pattern3 sigma, int n, std::vector<std::uint32_t> counts_by_rank)
    : sigma_(sigma), n_(n), counts_(std::move(counts_by_rank)) {
  if (counts_.size() != factorial(n)) {
    throw InvalidInput("spectrum needs exactly n! counters");
  }
  for (auto c : counts_) ++histogram_[c];
}

std::uint64_t SpectrumTable::fertility_of(const Permutation& p) const {
  if (p.size() != n_) {
    throw InvalidInput("permutation " + p.to_string() + " is not in S_" + std::to_string(n_));
  }
  return counts_[rank(p)];
}

std::uint64_t SpectrumTable::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

SpectrumTable spectrum(const Pattern3& sigma, int n, const EnumerationOptions& options) {
  if (n < 1) throw InvalidInput("spectrum needs n >= 1");
  check_guard(n, options, kSpectrumHardLimit);

  std::vector<std::uint64_t> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);

  std::vector<std::uint32_t> counts(fact[n], 0);
  const auto chunks = make_chunks(n, 0);
  const unsigned workers = worker_count(options, n, chunks.size());
  run_chunks(chunks.size(), workers, [&](std::size_t c) {
    std::vector<int> out(n), stack(n);
    for_each_with_prefix(n, chunks[c], [&](std::span<const int> tau) {
      detail::run_machine(sigma, tau, out, stack);
      std::atomic_ref<std::uint32_t>(counts[rank_of(out, fact)])
          .fetch_add(1, std::memory_order_relaxed);
    });
  });
  return SpectrumTable(sigma, n, std::move(counts));
}

}  // namespace scsort
