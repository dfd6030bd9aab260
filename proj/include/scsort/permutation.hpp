#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scsort {

// A permutation of 1..n (n >= 1). Entries are validated on construction and
// never change afterwards. Positions in every public function are 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  // Identity permutation 12...n.
  static Permutation identity(int n);

  // Parses the text format: compact digits ("52413") when the token has no
  // separator, otherwise entries split on spaces and/or commas.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }

  // 1-based access.
  int at(int position) const;
  int operator[](int position) const { return entries_[position - 1]; }

  std::span<const int> entries() const { return entries_; }

  // Compact form for n <= 9, space separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<int> entries) : entries_(std::move(entries)) {}
  friend Permutation standardize(std::span<const int> seq);
  friend Permutation reverse(const Permutation& p);
  friend Permutation complement(const Permutation& p);
  friend Permutation unrank(int n, std::uint64_t rank);

  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Replaces the i-th smallest entry of a distinct-integer sequence with i.
Permutation standardize(std::span<const int> seq);
inline Permutation standardize(std::initializer_list<int> seq) {
  return standardize(std::span<const int>(seq.begin(), seq.size()));
}

Permutation reverse(const Permutation& p);

// x -> n + 1 - x entrywise.
Permutation complement(const Permutation& p);

// 1-based position of x in p.
int index_of(const Permutation& p, int x);

// Lexicographic rank in S_n (0-based) and its inverse. n <= 20.
std::uint64_t rank(const Permutation& p);
Permutation unrank(int n, std::uint64_t rank);

// n! as a 64-bit value; n must be in 0..20.
std::uint64_t factorial(int n);

// One of the six permutations of length 3, used as the machine's forbidden
// consecutive order. Stored as the entry triple.
class Pattern3 {
 public:
  Pattern3(int a, int b, int c);
  explicit Pattern3(const Permutation& p);

  // Accepts exactly "123", "132", "213", "231", "312", "321".
  static Pattern3 parse(std::string_view text);

  // All six patterns in lexicographic order.
  static const std::array<Pattern3, 6>& all();

  int operator[](int position) const { return v_[position - 1]; }
  Permutation to_permutation() const { return Permutation{v_[0], v_[1], v_[2]}; }
  std::string to_string() const;
  Pattern3 complement() const { return Pattern3(4 - v_[0], 4 - v_[1], 4 - v_[2]); }

  // True when (a, b, c) has the same relative order as this pattern.
  bool matches(int a, int b, int c) const {
    return ((a < b) == (v_[0] < v_[1])) && ((b < c) == (v_[1] < v_[2])) &&
           ((a < c) == (v_[0] < v_[2]));
  }

  auto operator<=>(const Pattern3&) const = default;
  bool operator==(const Pattern3&) const = default;

 private:
  std::array<int, 3> v_;
};

std::ostream& operator<<(std::ostream& os, const Pattern3& p);

}  // namespace scsort
