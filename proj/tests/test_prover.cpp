#include <doctest.h>

#include "iplkit/prover.hpp"
#include "support/oracles.hpp"

using namespace iplkit;

namespace {

Formula f(const char* text) { return parse(text); }

// Brute-force local consequence over every model with at most three worlds.
bool semantically_follows(const FormulaSet& gamma, const Formula& phi, std::size_t k) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& m : oracle::all_models(k, n))
      for (std::size_t w = 0; w < n; ++w) {
        bool all = true;
        for (const auto& g : gamma) all = all && oracle::force(m, w, g);
        if (all && !oracle::force(m, w, phi)) return false;
      }
  return true;
}

void agrees(const FormulaSet& gamma, const Formula& phi, std::size_t k) {
  CAPTURE(render(phi));
  auto r = search_proof(gamma, phi, ProverLimits{});
  REQUIRE(r.outcome != SearchOutcome::Exhausted);
  bool follows = semantically_follows(gamma, phi, k);
  CHECK((r.outcome == SearchOutcome::Proved) == follows);
  if (r.outcome == SearchOutcome::Proved) {
    REQUIRE(r.proof);
    CHECK(check(gamma, *r.proof) == phi);
  } else {
    CHECK_FALSE(r.proof);
  }
}

}  // namespace

TEST_CASE("known theorems and non-theorems") {
  for (const char* t : {"p0 -> p0", "bot -> p0", "p0 -> p1 -> p0", "p0 & p1 -> p1 & p0", "p0 -> ~~p0",
                        "~~~p0 -> ~p0", "~~(p0 | ~p0)", "(p0 -> p1) -> ~p1 -> ~p0", "p0 & (p1 | p2) -> p0 & p1 | p0 & p2",
                        "~~(((p0 -> p1) -> p0) -> p0)"}) {
    CAPTURE(t);
    auto r = search_proof({}, f(t), ProverLimits{});
    REQUIRE(r.outcome == SearchOutcome::Proved);
    CHECK(check({}, *r.proof) == f(t));
  }
  for (const char* t : {"p0 | ~p0", "~~p0 -> p0", "((p0 -> p1) -> p0) -> p0", "(~p0 -> ~p1) -> p1 -> p0",
                        "(p0 -> p1) | (p1 -> p0)", "~p0 | ~~p0"}) {
    CAPTURE(t);
    CHECK(search_proof({}, f(t), ProverLimits{}).outcome == SearchOutcome::NotProvable);
  }
}

TEST_CASE("premises") {
  agrees({f("p0"), f("p0 -> p1")}, f("p1"), 2);
  agrees({f("p0 | p1"), f("~p0")}, f("p1"), 2);
  agrees({f("p0 | p1")}, f("p0"), 2);
  agrees({f("bot")}, f("p1"), 2);
  agrees({f("~~p0")}, f("p0"), 1);
  agrees({f("p0 -> p1"), f("p1 -> p0")}, f("p0 <-> p1"), 2);
}

TEST_CASE("agrees with brute-force semantics on small formulas") {
  for (const auto& phi : enumerate_formulas(2, 1)) agrees({}, phi, 2);
  for (const auto& phi : enumerate_formulas(1, 2)) agrees({}, phi, 1);
}

TEST_CASE("budget exhaustion is reported") {
  auto r = search_proof({}, f("((p0 -> p1) -> p2) -> ((p1 -> p0) -> p2) -> p2 | p1"), ProverLimits{1});
  CHECK(r.outcome == SearchOutcome::Exhausted);
  CHECK_FALSE(r.proof);
}
