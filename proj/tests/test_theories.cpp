#include <doctest.h>

#include <cstdlib>

#include "iplkit/theories.hpp"
#include "support/oracles.hpp"

using namespace iplkit;

namespace {

Formula f(const char* text) { return parse(text); }
const Oracle& shared() {
  static const Oracle o{OracleBudget{}};
  return o;
}

}  // namespace

TEST_CASE("universe") {
  auto u = FormulaUniverse::canonical(2, 1);
  CHECK(u.size() == 30);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) CHECK(encode(u.enumeration(i)) < encode(u.enumeration(i + 1)));
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(u.code(u.enumeration(i)) == i);
  CHECK_FALSE(u.code(f("p2")));
  CHECK(FormulaUniverse::canonical(0, 2).size() == 49);
  CHECK(FormulaUniverse::canonical(0, 0).size() == 1);
  CHECK_THROWS_AS(FormulaUniverse({f("p0"), f("p0")}), std::invalid_argument);
}

TEST_CASE("budget") {
  CHECK(OracleBudget::parse("4").max_worlds == 4);
  CHECK(OracleBudget::parse("2,500").max_steps == 500);
  CHECK_THROWS_AS(OracleBudget::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(OracleBudget::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(OracleBudget::parse("9"), std::invalid_argument);
}

TEST_CASE("oracle verdicts carry checked certificates") {
  auto v = shared().provable({}, f("p0 -> p0"));
  REQUIRE(v.provable());
  CHECK(check({}, *v.witness) == f("p0 -> p0"));
  v = shared().provable({}, f("p0 | ~p0"));
  REQUIRE(v.refuted());
  CHECK(v.countermodel->model.num_worlds() == 2);
  CHECK_FALSE(oracle::force(v.countermodel->model, v.countermodel->world, f("p0 | ~p0")));
  v = oracle_provable({f("p0")}, f("p1"), OracleBudget{1, 10});
  REQUIRE(v.refuted());
  CHECK(v.countermodel->model.num_worlds() == 1);
  CHECK(oracle::force(v.countermodel->model, 0, f("p0")));
}

TEST_CASE("oracle reports Unknown when both searches run out") {
  // Needs a three-world countermodel; one world and a tiny step budget are not enough.
  auto v = oracle_provable({}, f("~p0 | ~~p0"), OracleBudget{1, 1});
  CHECK(v.unknown());
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("theory predicates") {
  auto u = FormulaUniverse({f("p0"), f("p1")});
  CHECK(is_ded_closed({f("p0"), f("p1")}, u, shared()).truth == Truth::Holds);
  auto top = FormulaUniverse({Formula::top(), f("p0")});
  auto t = is_ded_closed({}, top, shared());
  CHECK(t.truth == Truth::Fails);
  CHECK(t.witness == std::vector<Formula>{Formula::top()});
  CHECK(is_ded_closed({f("p0")}, u, shared()).truth == Truth::Holds);

  CHECK(is_consistent({}, shared()).truth == Truth::Holds);
  auto c = is_consistent({f("bot")}, shared());
  CHECK(c.truth == Truth::Fails);
  REQUIRE(c.proof);
  CHECK(check({f("bot")}, *c.proof) == f("bot"));
  c = is_consistent({f("p0"), f("~p0")}, shared());
  CHECK(c.truth == Truth::Fails);
  CHECK(check({f("p0"), f("~p0")}, *c.proof) == f("bot"));

  auto d = FormulaUniverse({f("p0 | p1")});
  auto dj = is_disjunctive({f("p0 | p1")}, d, shared());
  CHECK(dj.truth == Truth::Fails);
  CHECK(dj.witness == std::vector<Formula>{f("p0"), f("p1")});
  CHECK(is_disjunctive({f("p0")}, d, shared()).truth == Truth::Holds);
  CHECK(is_disjunctive({f("p2")}, u, shared()).truth == Truth::Holds);
}

TEST_CASE("pair consistency") {
  CHECK(pair_implication({}, {}) == f("top -> bot"));
  auto v = pair_consistent({{f("p0")}, {f("p0")}}, shared());
  CHECK(v.truth == Truth::Fails);
  REQUIRE(v.subsets);
  CHECK(v.subsets->left == FormulaSet{f("p0")});
  CHECK(v.subsets->right == FormulaSet{f("p0")});
  CHECK(check({}, *v.proof) == f("p0 & top -> p0 | bot"));
  v = pair_consistent({{f("p0")}, {f("p1")}}, shared());
  CHECK(v.truth == Truth::Holds);
  REQUIRE(v.certificate);
  CHECK(oracle::force(v.certificate->model, v.certificate->world, f("p0")));
  CHECK_FALSE(oracle::force(v.certificate->model, v.certificate->world, f("p1")));
  CHECK(pair_consistent({{}, {}}, shared()).truth == Truth::Holds);
  // The smallest failing subset pair is found.
  v = pair_consistent({{f("p0"), f("p1"), f("p2")}, {f("p2 | p0"), f("p3")}}, shared());
  CHECK(v.truth == Truth::Fails);
  CHECK(v.subsets->left.size() + v.subsets->right.size() == 2);
}

TEST_CASE("adding formulas to a pair") {
  CHECK(add_formula_to_pair({{f("p0")}, {f("p1")}}, f("p0 & p0"), shared()) ==
        FormulaPair{{f("p0"), f("p0 & p0")}, {f("p1")}});
  CHECK(add_formula_to_pair({{f("p0")}, {}}, f("~p0"), shared()) == FormulaPair{{f("p0")}, {f("~p0")}});
  CHECK(add_formula_to_pair({{}, {}}, f("bot"), shared()) == FormulaPair{{}, {f("bot")}});
  CHECK_THROWS_AS(add_formula_step({{f("p0")}, {f("p0")}}, f("p1"), shared()), std::invalid_argument);
}

TEST_CASE("saturation") {
  auto s = saturate_pair({{f("p0")}, {f("p1")}}, FormulaUniverse({f("p0"), f("p1")}), shared());
  CHECK(s.result == FormulaPair{{f("p0")}, {f("p1")}});
  s = saturate_pair({{}, {}}, FormulaUniverse({f("bot")}), shared());
  CHECK(s.result == FormulaPair{{}, {f("bot")}});
  CHECK(family_increasing_check({{}, {}}, FormulaUniverse(), shared()));

  auto u = FormulaUniverse::canonical(2, 1);
  s = saturate_pair({{f("p0")}, {f("p1")}}, u, shared());
  CHECK(s.trace.size() == u.size() + 1);
  CHECK(family_increasing(s.trace));
  CHECK(s.result.left.size() + s.result.right.size() == u.size());
  CHECK(s.result.left.contains(f("p0")));
  CHECK(s.result.right.contains(f("p1")));
  // Placement of a few formulas, checked by hand.
  CHECK(s.result.left.contains(f("p1 -> p0")));
  CHECK(s.result.right.contains(f("p0 -> p1")));
  CHECK(s.result.right.contains(f("bot")));
  CHECK(s.result.left.contains(f("bot -> bot")));
  CHECK(pair_consistent(s.result, shared()).truth == Truth::Holds);
  CHECK_THROWS_AS(saturate_pair({{f("p2")}, {}}, u, shared()), std::invalid_argument);
  CHECK(family_increasing_check({{f("p0")}, {f("p1")}}, u, shared()));
}
