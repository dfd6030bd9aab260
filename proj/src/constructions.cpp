#include "scsort/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "scsort/error.hpp"

namespace scsort {

namespace {

const Pattern3 k123(1, 2, 3);
const Pattern3 k312(3, 1, 2);
const Pattern3 k213(2, 1, 3);

// Rows given directly; the other three are their complements.
bool is_base_row(const Pattern3& sigma) { return sigma == k123 || sigma == k312 || sigma == k213; }

void check_n(const Pattern3& sigma, int n) {
  const int min_n = family(sigma).min_n;
  if (n < min_n) {
    throw InvalidInput("witness family for sigma = " + sigma.to_string() + " needs n >= " +
                       std::to_string(min_n) + ", got n = " + std::to_string(n));
  }
  if (n + 1 > 20) throw InvalidInput("witness length n + 1 must be at most 20");
}

std::vector<int> ascending(int from, int to) {
  std::vector<int> v;
  for (int x = from; x <= to; ++x) v.push_back(x);
  return v;
}

Permutation base_target(const Pattern3& sigma, int n) {
  std::vector<int> p;
  if (sigma == k123) {
    for (int x = n; x >= 1; --x) p.push_back(x);
    p.push_back(n + 1);
  } else if (sigma == k312) {
    p = ascending(1, n - 1);
    p.push_back(n + 1);
    p.push_back(n);
  } else {
    p = ascending(1, n - 4);
    for (int x : {n - 2, n - 3, n - 1, n, n + 1}) p.push_back(x);
  }
  return Permutation(std::move(p));
}

std::vector<Permutation> base_preimages(const Pattern3& sigma, int n) {
  std::vector<Permutation> out;
  if (sigma == k123) {
    for (int m = 0; m <= n - 1; ++m) {
      std::vector<int> t{n + 1};
      for (int x = n; x >= n - m + 1; --x) t.push_back(x);
      for (int x = 1; x <= n - m; ++x) t.push_back(x);
      out.emplace_back(std::move(t));
    }
  } else if (sigma == k312) {
    for (int m = 0; m <= n - 1; ++m) {
      std::vector<int> t{n};
      for (int x = m; x >= 1; --x) t.push_back(x);
      t.push_back(n + 1);
      for (int x = n - 1; x >= m + 1; --x) t.push_back(x);
      out.emplace_back(std::move(t));
    }
  } else {
    std::vector<int> head{n + 1};
    for (int x = 1; x <= n - 4; ++x) head.push_back(x);
    head.push_back(n - 2);

    std::vector<int> single(head);
    for (int x : {n, n - 3, n - 1}) single.push_back(x);
    out.emplace_back(std::move(single));

    // n slides through every slot after the leading n+1 and before n-1.
    std::vector<int> base(head);
    base.push_back(n - 1);
    base.push_back(n - 3);
    const auto last_slot = static_cast<std::ptrdiff_t>(head.size());
    for (std::ptrdiff_t slot = 1; slot <= last_slot; ++slot) {
      std::vector<int> t(base);
      t.insert(t.begin() + slot, n);
      out.emplace_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Permutation ConstructionFamily::target(int n) const { return construct(sigma, n); }

std::uint64_t ConstructionFamily::expected_fertility(int n) const {
  check_n(sigma, n);
  return (sigma == k213 || sigma == k213.complement()) ? static_cast<std::uint64_t>(n - 1)
                                                       : static_cast<std::uint64_t>(n);
}

ConstructionFamily family(const Pattern3& sigma) {
  const bool shifted_row = sigma == k213 || sigma == k213.complement();
  return ConstructionFamily{sigma, shifted_row ? 6 : 1};
}

Permutation construct(const Pattern3& sigma, int n) {
  check_n(sigma, n);
  if (is_base_row(sigma)) return base_target(sigma, n);
  return complement(base_target(sigma.complement(), n));
}

std::vector<Permutation> construct_preimages(const Pattern3& sigma, int n) {
  check_n(sigma, n);
  std::vector<Permutation> out;
  if (is_base_row(sigma)) {
    out = base_preimages(sigma, n);
  } else {
    for (const auto& tau : base_preimages(sigma.complement(), n)) out.push_back(complement(tau));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation small_witness(const Pattern3& sigma, int f) {
  if (f < 1) throw InvalidInput("fertility witness needs f >= 1, got " + std::to_string(f));
  const bool shifted_row = sigma == k213 || sigma == k213.complement();
  if (!shifted_row) return construct(sigma, f);
  if (f >= 5) return construct(sigma, f + 1);
  // Fertilities 1..4 under 213, found by direct search.
  static const Permutation table[] = {Permutation{4, 3, 2, 1}, Permutation{1, 2, 4, 3},
                                      Permutation{1, 3, 5, 2, 4}, Permutation{1, 2, 3, 4}};
  const Permutation& w = table[f - 1];
  return sigma == k213 ? w : complement(w);
}

}  // namespace scsort
