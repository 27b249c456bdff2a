#include <doctest.h>

#include <set>

#include "support/oracles.hpp"

using namespace iplkit;

namespace {

Formula f(const char* text) { return parse(text); }

// 0 = bot, 1 = p, 2 = q, 3 = top.
FiniteHeytingAlgebra boolean4() { return FiniteHeytingAlgebra::from_order("B4", {0b1111, 0b1010, 0b1100, 0b1000}, 0, 3); }

ElementSet set(std::initializer_list<Element> es) {
  ElementSet s = 0;
  for (auto e : es) s |= ElementSet{1} << e;
  return s;
}

// Residuation checked directly on the tables.
bool residuated(const FiniteHeytingAlgebra& h) {
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      for (Element c = 0; c < h.size(); ++c)
        if (h.le(a, h.himp(b, c)) != h.le(h.meet(a, b), c)) return false;
  return true;
}

}  // namespace

TEST_CASE("chains") {
  auto c2 = chain_algebra(2);
  CHECK(validate_algebra(c2).empty());
  auto c3 = chain_algebra(3);  // 0 < a=1 < 1=2
  CHECK(validate_algebra(c3).empty());
  CHECK(c3.himp(2, 1) == 1);
  CHECK(c3.himp(1, 0) == 0);
  for (Element x = 0; x < 3; ++x)
    for (Element y = x; y < 3; ++y) CHECK(c3.himp(x, y) == 2);
  CHECK(c3.name() == "C3");
}

TEST_CASE("validate_algebra finds a broken implication") {
  auto c3 = chain_algebra(3);
  Table himp = c3.himp_table();
  himp[1 * 3 + 0] = 1;
  FiniteHeytingAlgebra broken("broken", c3.lattice(), himp);
  auto v = validate_algebra(broken);
  REQUIRE(!v.empty());
  CHECK(v.front().kind == AlgebraViolation::Kind::Residuation);
  CHECK(v.front().witness == std::vector<Element>{1, 1, 0});
}

TEST_CASE("non-lattices and non-Heyting lattices are rejected") {
  // M3: 0 bottom, three atoms, 4 top.
  CHECK_THROWS_AS(FiniteHeytingAlgebra::from_order("M3", {0b11111, 0b10010, 0b10100, 0b11000, 0b10000}, 0, 4), NotHeyting);
  // N5: 0 < a < b < 1 and 0 < c < 1.
  CHECK_THROWS_AS(FiniteHeytingAlgebra::from_order("N5", {0b11111, 0b10110, 0b10100, 0b11000, 0b10000}, 0, 4), NotHeyting);
  // Two maximal elements: no join.
  CHECK_THROWS_AS(lattice_from_order({0b111, 0b010, 0b100}, 0, 2), std::invalid_argument);
}

TEST_CASE("Boolean four") {
  auto b = boolean4();
  CHECK(validate_algebra(b).empty());
  auto neg = [](Element x) { return Element{3} - x; };
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) CHECK(b.himp(x, y) == b.join(neg(x), y));
  auto prod = product_algebra(chain_algebra(2), chain_algebra(2));
  CHECK(validate_algebra(prod).empty());
  CHECK(prod.name() == "C2xC2");
}

TEST_CASE("catalog building blocks are Heyting algebras") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(validate_algebra(chain_algebra(n)).empty());
    CHECK(residuated(chain_algebra(n)));
  }
  auto p = product_algebra(chain_algebra(3), chain_algebra(2));
  CHECK(p.size() == 6);
  CHECK(validate_algebra(p).empty());
  CHECK(residuated(p));
}

TEST_CASE("filters") {
  auto c3 = chain_algebra(3);
  CHECK(is_filter(c3, set({2})));
  CHECK_FALSE(is_filter(c3, set({1})));
  CHECK(is_filter(c3, set({1, 2})));
  CHECK(filters(c3) == std::vector<ElementSet>{set({2}), set({1, 2}), set({0, 1, 2})});
  for (auto h : {chain_algebra(4), boolean4(), product_algebra(chain_algebra(3), chain_algebra(2))}) {
    auto fs = filters(h);
    CHECK(fs.size() == oracle::all_filters(h).size());
    for (auto x : fs) CHECK(oracle::is_filter(h, x));
  }
}

TEST_CASE("generated filters") {
  auto c3 = chain_algebra(3);
  CHECK(generated_filter(c3, 0) == set({2}));
  CHECK(generated_filter(c3, set({1})) == set({1, 2}));
  auto b = boolean4();
  CHECK(generated_filter(b, set({1, 2})) == b.all());
  for (ElementSet x = 0; x < 16; ++x) {
    CHECK(generated_filter_by_meets(b, x) == oracle::least_filter(b, x));
    CHECK(generated_filter_by_intersection(b, x) == oracle::least_filter(b, x));
  }
}

TEST_CASE("prime filters") {
  auto b = boolean4();
  CHECK(is_proper(b, set({3})));
  CHECK_FALSE(is_prime(b, set({3})));
  auto c3 = chain_algebra(3);
  CHECK(is_proper(c3, set({1, 2})));
  CHECK(is_prime(c3, set({1, 2})));
  CHECK_FALSE(is_proper(c3, c3.all()));
  CHECK(prime_filters(c3) == std::vector<ElementSet>{set({2}), set({1, 2})});
  CHECK(prime_filters(chain_algebra(2)) == std::vector<ElementSet>{set({1})});
  CHECK(prime_filters(b) == std::vector<ElementSet>{set({1, 3}), set({2, 3})});
  for (auto h : {chain_algebra(5), product_algebra(chain_algebra(3), chain_algebra(2))}) {
    std::vector<ElementSet> expected;
    for (auto x : oracle::all_filters(h))
      if (oracle::is_prime(h, x)) expected.push_back(x);
    auto ours = prime_filters(h);
    CHECK(std::set<ElementSet>(ours.begin(), ours.end()) == std::set<ElementSet>(expected.begin(), expected.end()));
  }
}

TEST_CASE("super prime filters") {
  auto c3 = chain_algebra(3);
  auto b = boolean4();
  CHECK(super_prime_filter(c3, set({2}), 1) == set({2}));
  CHECK(super_prime_filter(b, set({3}), 1) == set({2, 3}));
  CHECK(super_prime_filter(c3, set({1, 2}), 0) == set({1, 2}));
  CHECK_THROWS_AS(super_prime_filter(c3, set({1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(super_prime_filter(c3, set({1, 2}), 1), std::invalid_argument);
  CHECK(prime_filter_avoiding(c3, 1) == set({2}));
  CHECK(prime_filter_avoiding(b, 1) == set({2, 3}));
  CHECK(prime_filter_avoiding(chain_algebra(2), 0) == set({1}));
  CHECK(prime_intersection(c3) == set({2}));
  CHECK(prime_intersection(b) == set({3}));
  CHECK(prime_intersection(chain_algebra(2)) == set({1}));
}

TEST_CASE("witness for membership in a generated filter") {
  auto c3 = chain_algebra(3);
  auto b = boolean4();
  CHECK(gen_ins_witness(c3, set({1, 2}), 0, 1) == 1);
  CHECK(gen_ins_witness(chain_algebra(2), set({1}), 1, 1) == 1);
  // Some z exists whenever y is in the generated filter.
  for (const auto& h : {c3, b, chain_algebra(4)})
    for (auto fl : oracle::all_filters(h))
      for (Element x = 0; x < h.size(); ++x)
        for (Element y = 0; y < h.size(); ++y) {
          if (!((oracle::least_filter(h, fl | (ElementSet{1} << x)) >> y) & 1U)) {
            CHECK_THROWS_AS(gen_ins_witness(h, fl, x, y), std::invalid_argument);
            continue;
          }
          Element z = gen_ins_witness(h, fl, x, y);
          CHECK(((fl >> z) & 1U));
          CHECK(h.le(h.meet(x, z), y));
          CHECK(himp_not_mem_check(h, fl, x, y));
        }
}

TEST_CASE("algebraic semantics") {
  auto c3 = chain_algebra(3);
  const Assignment a{{Var{0}, 1}};
  CHECK(interpret(c3, a, f("~p0")) == 0);
  CHECK(interpret(c3, a, f("p0 | ~p0")) == 1);
  CHECK(interpret(c3, a, Formula::top()) == 2);
  CHECK(true_in_alg_model(chain_algebra(2), {{Var{0}, 1}}, f("p0")));
  CHECK_FALSE(true_in_alg_model(c3, a, f("p0 | ~p0")));
  CHECK(true_in_alg_model(c3, a, f("p0 -> p0")));
  CHECK(valid_in_alg(chain_algebra(2), f("p0 | ~p0")));
  CHECK_FALSE(valid_in_alg(c3, f("p0 | ~p0")));
  CHECK(alg_refutation(c3, f("p0 | ~p0")) == a);
  CHECK(valid_in_alg(boolean4(), f("bot -> p0")));
  CHECK_THROWS_AS(interpret(c3, a, f("p1")), UnassignedVariable);
  CHECK(assignments(c3, {Var{0}, Var{1}}).size() == 9);
  CHECK(assignments(c3, {Var{0}, Var{1}})[1] == Assignment{{Var{0}, 0}, {Var{1}, 1}});
}

TEST_CASE("two-element algebra is classical logic") {
  auto c2 = chain_algebra(2);
  for (const auto& phi : enumerate_formulas(2, 2))
    for (unsigned row = 0; row < 4; ++row) {
      Assignment a{{Var{0}, row & 1U}, {Var{1}, (row >> 1) & 1U}};
      CHECK((interpret(c2, a, phi) == 1) == oracle::truth_table(phi, row));
    }
}

TEST_CASE("algebraic consequence over a family") {
  std::vector<FiniteHeytingAlgebra> fam{chain_algebra(2), chain_algebra(3), boolean4()};
  CHECK(alg_sem_conseq_over(fam, {f("p0")}, f("p0 & p0")).holds);
  auto r = alg_sem_conseq_over(fam, {}, f("p0 | ~p0"));
  CHECK_FALSE(r.holds);
  CHECK(r.algebra == 1);
  CHECK(r.assignment == Assignment{{Var{0}, 1}});
  CHECK(alg_sem_conseq_over(fam, {f("bot")}, f("p0")).holds);
}
