#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scsort/error.hpp"
#include "scsort/report_io.hpp"
#include "scsort/verify.hpp"

using namespace scsort;

TEST_CASE("single claims") {
  const auto fig = run_claims(7, {"figure1"});
  REQUIRE(fig.size() == 1);
  CHECK(fig[0].claim_id == "figure1");
  CHECK(fig[0].passed);
  CHECK_FALSE(fig[0].counterexample);

  const auto table = run_claims(7, {"table_small_213"});
  CHECK(table[0].passed);

  const auto l5 = run_claims(4, {"lemma5"});
  CHECK(l5[0].passed);
  CHECK(l5[0].scope.find("1..4") != std::string::npos);
}

TEST_CASE("full suite at max_n = 7 passes, in registry order") {
  const auto results = run_claims(7);
  REQUIRE(results.size() == claim_ids().size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    INFO(results[i].claim_id << ": " << results[i].counterexample.value_or(""));
    CHECK(results[i].claim_id == claim_ids()[i]);
    CHECK(results[i].passed);
  }
  CHECK(all_passed(results));
}

TEST_CASE("selection order does not change report order") {
  const auto a = run_claims(5, {"theorem1", "figure1", "lemma5"});
  REQUIRE(a.size() == 3);
  CHECK(a[0].claim_id == "figure1");
  CHECK(a[1].claim_id == "lemma5");
  CHECK(a[2].claim_id == "theorem1");
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = run_claims(5);
  const auto b = run_claims(5);
  CHECK(claims_to_text(a) == claims_to_text(b));
  CHECK(claims_to_json(a) == claims_to_json(b));
  CHECK(claims_to_json(a).find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(run_claims(2), InvalidInput);
  CHECK_THROWS_AS(run_claims(10), InvalidInput);
  CHECK_THROWS_AS(run_claims(7, {"lemma99"}), InvalidInput);
}

TEST_CASE("failed claims render their counterexample") {
  std::vector<ClaimResult> r{{"figure1", "scope", false, "sigma=213 tau=52413 observed x"}};
  CHECK_FALSE(all_passed(r));
  CHECK(claims_to_text(r).find("FAIL") != std::string::npos);
  CHECK(claims_to_json(r).find("\"counterexample\": \"sigma=213") != std::string::npos);
}
