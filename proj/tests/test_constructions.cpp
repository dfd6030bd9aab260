#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "scsort/constructions.hpp"
#include "scsort/error.hpp"
#include "scsort/fertility.hpp"

using namespace scsort;

namespace {

std::vector<std::string> strings(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<int> range_down(int from, int to) {
  std::vector<int> v;
  for (int x = from; x >= to; --x) v.push_back(x);
  return v;
}

std::vector<int> range_up(int from, int to) {
  std::vector<int> v;
  for (int x = from; x <= to; ++x) v.push_back(x);
  return v;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// The table's printed forms for the three complement-defined rows.
Permutation printed_321(int n) { return Permutation(cat(range_up(2, n + 1), {1})); }
Permutation printed_132(int n) { return Permutation(cat(range_down(n + 1, 3), {1, 2})); }
Permutation printed_231(int n) { return Permutation(cat(range_down(n + 1, 6), {4, 5, 3, 2, 1})); }

}  // namespace

TEST_CASE("construct worked examples") {
  CHECK(construct(Pattern3(1, 2, 3), 3).to_string() == "3214");
  CHECK(construct(Pattern3(3, 2, 1), 3).to_string() == "2341");
  CHECK(construct(Pattern3(3, 1, 2), 3).to_string() == "1243");
  CHECK(construct(Pattern3(2, 1, 3), 6).to_string() == "1243567");
  CHECK(construct(Pattern3(1, 2, 3), 1).to_string() == "12");
}

TEST_CASE("complement rows match the printed table") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(construct(Pattern3(3, 2, 1), n) == printed_321(n));
    if (n >= 2) CHECK(construct(Pattern3(1, 3, 2), n) == printed_132(n));
  }
  for (int n = 6; n <= 12; ++n) CHECK(construct(Pattern3(2, 3, 1), n) == printed_231(n));
}

TEST_CASE("construct rejects n below the family bound") {
  CHECK_THROWS_AS(construct(Pattern3(2, 1, 3), 5), InvalidInput);
  CHECK_THROWS_AS(construct(Pattern3(2, 3, 1), 5), InvalidInput);
  CHECK_THROWS_AS(construct(Pattern3(1, 2, 3), 0), InvalidInput);
  CHECK_THROWS_AS(construct_preimages(Pattern3(2, 1, 3), 4), InvalidInput);
  try {
    construct(Pattern3(2, 1, 3), 3);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("n >= 6") != std::string::npos);
  }
}

TEST_CASE("family metadata") {
  for (const auto& sigma : Pattern3::all()) {
    const auto fam = family(sigma);
    const bool t5 = sigma == Pattern3(2, 1, 3) || sigma == Pattern3(2, 3, 1);
    CHECK(fam.min_n == (t5 ? 6 : 1));
    CHECK(fam.expected_fertility(7) == (t5 ? 6u : 7u));
    CHECK(fam.target(7).size() == 8);
  }
}

TEST_CASE("construct_preimages worked examples") {
  CHECK(strings(construct_preimages(Pattern3(1, 2, 3), 3)) ==
        std::vector<std::string>{"4123", "4312", "4321"});
  CHECK(strings(construct_preimages(Pattern3(3, 1, 2), 3)) ==
        std::vector<std::string>{"3142", "3214", "3421"});
  // Frozen from brute force over S_7 with the reference machine.
  const std::vector<std::string> t5{"7124635", "7124653", "7126453", "7162453", "7612453"};
  CHECK(strings(construct_preimages(Pattern3(2, 1, 3), 6)) == t5);
  const auto brute = oracle::preimages(Pattern3(2, 1, 3), {1, 2, 4, 3, 5, 6, 7});
  CHECK(brute.size() == 5);
}

TEST_CASE("every family has its stated fertility and preimage list, lengths <= 8") {
  for (const auto& sigma : Pattern3::all()) {
    const auto fam = family(sigma);
    for (int n = fam.min_n; n + 1 <= 8; ++n) {
      const auto pi = construct(sigma, n);
      const auto report = preimages(sigma, pi);
      INFO("sigma=" << sigma << " n=" << n);
      REQUIRE(report.count == fam.expected_fertility(n));
      REQUIRE(*report.preimages == construct_preimages(sigma, n));
    }
  }
}

TEST_CASE("complement coherence of targets and preimage lists") {
  for (const auto& base : {Pattern3(1, 2, 3), Pattern3(3, 1, 2), Pattern3(2, 1, 3)}) {
    const auto other = base.complement();
    for (int n = family(base).min_n; n <= 9; ++n) {
      CHECK(construct(other, n) == complement(construct(base, n)));
      auto comp = construct_preimages(base, n);
      for (auto& p : comp) p = complement(p);
      std::sort(comp.begin(), comp.end());
      CHECK(construct_preimages(other, n) == comp);
    }
  }
}

TEST_CASE("pattern-popped values keep their input order for the 213/231 families") {
  for (const auto& sigma : {Pattern3(2, 1, 3), Pattern3(2, 3, 1)}) {
    for (int n : {6, 7}) {
      const auto pi = construct(sigma, n);
      const auto report = preimages(sigma, pi);
      for (const auto& tau : *report.preimages) {
        const int k = cro(sigma, tau);
        CHECK(k > 0);
        for (int i = 1; i < k; ++i) CHECK(index_of(tau, pi[i]) < index_of(tau, pi[i + 1]));
      }
    }
  }
}

TEST_CASE("small_witness") {
  const Pattern3 p213(2, 1, 3);
  CHECK(small_witness(p213, 1).to_string() == "4321");
  CHECK(small_witness(p213, 2).to_string() == "1243");
  CHECK(small_witness(p213, 3).to_string() == "13524");
  CHECK(small_witness(p213, 4).to_string() == "1234");
  CHECK(small_witness(p213, 5) == construct(p213, 6));
  CHECK(small_witness(Pattern3(2, 3, 1), 3) == complement(Permutation{1, 3, 5, 2, 4}));
  CHECK(small_witness(Pattern3(1, 2, 3), 4) == construct(Pattern3(1, 2, 3), 4));
  CHECK_THROWS_AS(small_witness(p213, 0), InvalidInput);
  for (const auto& sigma : Pattern3::all()) {
    for (int f = 1; f <= 6; ++f) {
      INFO("sigma=" << sigma << " f=" << f);
      CHECK(fertility(sigma, small_witness(sigma, f)) == static_cast<std::uint64_t>(f));
    }
  }
}
