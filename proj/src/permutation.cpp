#include "scsort/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include "scsort/error.hpp"

namespace scsort {

namespace {

void validate(const std::vector<int>& entries) {
  if (entries.empty()) throw InvalidInput("permutation must have at least one entry");
  const int n = static_cast<int>(entries.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n) {
      throw InvalidInput("permutation entry " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
    }
    if (seen[v]) throw InvalidInput("permutation entry " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  validate(entries_);
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidInput("permutation length must be at least 1");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(Trusted{}, std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  const std::string quoted = "'" + std::string(text) + "'";
  if (text.empty()) throw InvalidInput("empty permutation text");
  std::vector<int> entries;
  if (text.find_first_of(" ,") == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw InvalidInput("invalid character in compact permutation " + quoted);
      }
      entries.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = text.find_first_of(" ,", i);
      if (j == std::string_view::npos) j = text.size();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
      if (ec != std::errc{} || ptr != text.data() + j) {
        throw InvalidInput("invalid entry '" + std::string(text.substr(i, j - i)) +
                           "' in permutation " + quoted);
      }
      entries.push_back(value);
      i = j;
    }
  }
  try {
    return Permutation(std::move(entries));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(e.what()) + " in " + quoted);
  }
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw InvalidInput("position " + std::to_string(position) + " outside 1.." +
                       std::to_string(size()));
  }
  return entries_[position - 1];
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : entries_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation standardize(std::span<const int> seq) {
  if (seq.empty()) throw InvalidInput("cannot standardize an empty sequence");
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]]) {
      throw InvalidInput("cannot standardize: value " + std::to_string(seq[order[r]]) +
                         " appears twice");
    }
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(Permutation::Trusted{}, std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.entries_.rbegin(), p.entries_.rend());
  return Permutation(Permutation::Trusted{}, std::move(out));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(p.entries_);
  for (int& v : out) v = n + 1 - v;
  return Permutation(Permutation::Trusted{}, std::move(out));
}

int index_of(const Permutation& p, int x) {
  if (x < 1 || x > p.size()) {
    throw InvalidInput("value " + std::to_string(x) + " outside 1.." + std::to_string(p.size()));
  }
  auto e = p.entries();
  return static_cast<int>(std::find(e.begin(), e.end(), x) - e.begin()) + 1;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InvalidInput("factorial argument outside 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  if (n > 20) throw InvalidInput("rank needs n <= 20");
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int v = p[i + 1];
    const int smaller_unused = (v - 1) - std::popcount(used & ((1u << (v - 1)) - 1u));
    r += static_cast<std::uint64_t>(smaller_unused) * factorial(n - 1 - i);
    used |= 1u << (v - 1);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  if (n < 1 || n > 20) throw InvalidInput("unrank needs 1 <= n <= 20");
  if (r >= factorial(n)) throw InvalidInput("rank out of range for S_" + std::to_string(n));
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto k = static_cast<std::size_t>(r / f);
    r %= f;
    out.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(Permutation::Trusted{}, std::move(out));
}

Pattern3::Pattern3(int a, int b, int c) : v_{a, b, c} {
  Permutation check{a, b, c};  // throws on anything but a permutation of 123
  (void)check;
}

Pattern3::Pattern3(const Permutation& p) {
  if (p.size() != 3) throw InvalidInput("pattern must have length 3, got '" + p.to_string() + "'");
  v_ = {p[1], p[2], p[3]};
}

Pattern3 Pattern3::parse(std::string_view text) {
  for (const auto& p : all()) {
    if (p.to_string() == text) return p;
  }
  throw InvalidInput("unknown pattern '" + std::string(text) +
                     "' (expected one of 123, 132, 213, 231, 312, 321)");
}

const std::array<Pattern3, 6>& Pattern3::all() {
  static const std::array<Pattern3, 6> patterns{Pattern3(1, 2, 3), Pattern3(1, 3, 2),
                                                Pattern3(2, 1, 3), Pattern3(2, 3, 1),
                                                Pattern3(3, 1, 2), Pattern3(3, 2, 1)};
  return patterns;
}

std::string Pattern3::to_string() const {
  return {static_cast<char>('0' + v_[0]), static_cast<char>('0' + v_[1]),
          static_cast<char>('0' + v_[2])};
}

std::ostream& operator<<(std::ostream& os, const Pattern3& p) { return os << p.to_string(); }

}  // namespace scsort
