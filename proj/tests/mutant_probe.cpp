// Linked against the core built with the pattern-pop condition inverted.
// Exit 0: worked-example check passed (mutation undetected).
// Exit 1: both the worked-example check and the verify claim caught the mutation.
// Exit 2: only one of them caught it.

#include <iostream>

#include "worked_example.hpp"
#include "scsort/verify.hpp"

int main() {
  const auto direct = acceptance::check_worked_example();
  const auto claim = scsort::run_claims(7, {"figure1"}).front();
  std::cout << "worked-example check under mutation: " << (direct.pass ? "pass" : "fail") << " ("
            << direct.detail << ")\n";
  std::cout << "figure1 claim under mutation: " << (claim.passed ? "pass" : "fail");
  if (claim.counterexample) std::cout << " (" << *claim.counterexample << ")";
  std::cout << "\n";
  if (direct.pass && claim.passed) return 0;
  return (!direct.pass && !claim.passed) ? 1 : 2;
}
