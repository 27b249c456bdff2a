#include "iplkit/prover.hpp"

#include <algorithm>
#include <functional>
#include <map>

// Sequent search in the contraction-free calculus G4ip. A context
// [A1, ..., An] (kept sorted and duplicate free) is represented in the
// Hilbert system by the left-nested conjunction ((top & A1) & ...) & An, and
// every successful search step yields a derivation of Ctx -> goal.

namespace iplkit {

namespace {

using F = Formula;
using Ctx = std::vector<Formula>;

struct OutOfSteps {};

bool contains(const Ctx& c, const Formula& f) { return std::binary_search(c.begin(), c.end(), f); }

Ctx with(Ctx c, std::initializer_list<Formula> add) {
  for (const auto& f : add) {
    auto it = std::lower_bound(c.begin(), c.end(), f);
    if (it == c.end() || *it != f) c.insert(it, f);
  }
  return c;
}

Ctx without(Ctx c, const Formula& f) {
  auto it = std::lower_bound(c.begin(), c.end(), f);
  if (it != c.end() && *it == f) c.erase(it);
  return c;
}

// A context with its prefix conjunctions, for projections.
class View {
 public:
  explicit View(const Ctx& c) : items_(c) {
    prefixes_.push_back(F::top());
    for (const auto& f : c) prefixes_.push_back(F::conj(prefixes_.back(), f));
  }

  const Formula& formula() const { return prefixes_.back(); }

  // Ctx -> items[i]
  Derivation proj(const Formula& f) const {
    auto i = static_cast<std::size_t>(std::lower_bound(items_.begin(), items_.end(), f) - items_.begin());
    Derivation acc = derive::and_elim_right(prefixes_[i], items_[i]);
    for (std::size_t k = i + 1; k < items_.size(); ++k)
      acc = derive::syllogism(derive::and_elim_left(prefixes_[k], items_[k]), acc);
    return acc;
  }

  bool has(const Formula& f) const { return contains(items_, f); }

 private:
  const Ctx& items_;
  std::vector<Formula> prefixes_;
};

// k -> Ctx(target), from one derivation k -> t per member t.
Derivation build(const Formula& k, const Ctx& target, const std::function<Derivation(const Formula&)>& get) {
  Derivation acc = derive::constant(derive::top_intro(), k);
  for (const auto& t : target) acc = derive::pair_imp(acc, get(t));
  return acc;
}

class Search {
 public:
  explicit Search(const ProverLimits& limits) : limits_(limits) {}

  std::optional<Derivation> solve(const Ctx& c, const Formula& goal) {
    auto key = std::make_pair(c, goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++steps_ > limits_.max_steps) throw OutOfSteps{};
    auto r = expand(c, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

  std::size_t steps() const { return steps_; }

 private:
  const ProverLimits& limits_;
  std::size_t steps_ = 0;
  std::map<std::pair<Ctx, Formula>, std::optional<Derivation>> memo_;

  // Replace the context by c2, each of whose members is derivable from c.
  std::optional<Derivation> via(const View& v, const Ctx& c2, const Formula& goal,
                                const std::function<Derivation(const Formula&)>& fresh) {
    auto d = solve(c2, goal);
    if (!d) return std::nullopt;
    auto morph = build(v.formula(), c2, [&](const Formula& t) { return v.has(t) ? v.proj(t) : fresh(t); });
    return derive::syllogism(morph, *d);
  }

  std::optional<Derivation> expand(const Ctx& c, const Formula& goal) {
    View v(c);
    const Formula& k = v.formula();
    if (v.has(goal)) return v.proj(goal);
    if (v.has(F::bottom())) return derive::syllogism(v.proj(F::bottom()), derive::axiom(ProofTerm::exfalso(goal)));

    // Invertible left rules without branching.
    for (const auto& x : c) {
      if (x.is(Connective::And)) {
        const F &a = x.lhs(), &b = x.rhs();
        return via(v, with(without(c, x), {a, b}), goal, [&](const Formula& t) {
          return derive::syllogism(v.proj(x), t == a ? derive::and_elim_left(a, b) : derive::and_elim_right(a, b));
        });
      }
      if (!x.is(Connective::Implies)) continue;
      const F &a = x.lhs(), &d = x.rhs();
      if (a.is_bottom()) return via(v, without(c, x), goal, [](const Formula&) -> Derivation { throw std::logic_error("unreachable"); });
      if (a.is_variable() && v.has(a)) {
        return via(v, with(without(c, x), {d}), goal, [&](const Formula&) {
          return derive::syllogism(derive::pair_imp(v.proj(x), v.proj(a)), derive::apply(a, d));
        });
      }
      if (a.is(Connective::And)) {
        F curried = F::implies(a.lhs(), F::implies(a.rhs(), d));
        return via(v, with(without(c, x), {curried}), goal,
                   [&](const Formula&) { return derive::export_under(v.proj(x)); });
      }
      if (a.is(Connective::Or)) {
        F left = F::implies(a.lhs(), d);
        F right = F::implies(a.rhs(), d);
        return via(v, with(without(c, x), {left, right}), goal, [&](const Formula& t) {
          return t == left ? derive::pre_compose(v.proj(x), derive::or_intro_left(a.lhs(), a.rhs()))
                           : derive::pre_compose(v.proj(x), derive::or_intro_right(a.lhs(), a.rhs()));
        });
      }
    }

    // Invertible right rules.
    if (goal.is(Connective::And)) {
      auto l = solve(c, goal.lhs());
      if (!l) return std::nullopt;
      auto r = solve(c, goal.rhs());
      if (!r) return std::nullopt;
      return derive::pair_imp(*l, *r);
    }
    if (goal.is(Connective::Implies)) {
      const F &a = goal.lhs(), &b = goal.rhs();
      Ctx c2 = with(c, {a});
      auto d = solve(c2, b);
      if (!d) return std::nullopt;
      auto morph = build(F::conj(k, a), c2, [&](const Formula& t) {
        if (v.has(t)) return derive::syllogism(derive::and_elim_left(k, a), v.proj(t));
        return derive::and_elim_right(k, a);
      });
      return derive::exportation(derive::syllogism(morph, *d));
    }

    // Disjunction on the left: invertible, two premises.
    for (const auto& x : c) {
      if (!x.is(Connective::Or)) continue;
      Ctx rest = without(c, x);
      View rv(rest);
      const Formula& kr = rv.formula();
      auto branch = [&](const Formula& a) -> std::optional<Derivation> {
        Ctx c2 = with(rest, {a});
        auto d = solve(c2, goal);
        if (!d) return std::nullopt;
        auto morph = build(F::conj(kr, a), c2, [&](const Formula& t) {
          if (rv.has(t)) return derive::syllogism(derive::and_elim_left(kr, a), rv.proj(t));
          return derive::and_elim_right(kr, a);
        });
        auto body = derive::syllogism(morph, *d);  // kr & a -> goal
        return derive::exportation(derive::syllogism(derive::axiom(ProofTerm::permutation_conj(a, kr)), body));
      };
      auto l = branch(x.lhs());
      if (!l) return std::nullopt;
      auto r = branch(x.rhs());
      if (!r) return std::nullopt;
      auto joined = derive::importation(derive::or_elim(*l, *r));  // (a | b) & kr -> goal
      auto split = derive::pair_imp(v.proj(x), build(k, rest, [&](const Formula& t) { return v.proj(t); }));
      return derive::syllogism(split, joined);
    }

    // Non-invertible rules.
    if (goal.is(Connective::Or)) {
      const F &a = goal.lhs(), &b = goal.rhs();
      if (auto d = solve(c, a)) return derive::syllogism(*d, derive::or_intro_left(a, b));
      if (auto d = solve(c, b)) return derive::syllogism(*d, derive::or_intro_right(a, b));
    }
    for (const auto& x : c) {
      if (!x.is(Connective::Implies) || !x.lhs().is(Connective::Implies)) continue;
      const F &a = x.lhs().lhs(), &b = x.lhs().rhs(), &d = x.rhs();
      Ctx rest = without(c, x);
      F bd = F::implies(b, d);
      Ctx c1 = with(rest, {bd});
      auto d1 = solve(c1, x.lhs());
      if (!d1) continue;
      Ctx c2 = with(rest, {d});
      auto d2 = solve(c2, goal);
      if (!d2) continue;
      auto k_bd = derive::pre_compose(v.proj(x), derive::k_axiom(b, a));
      auto k_ab = derive::syllogism(build(k, c1, [&](const Formula& t) { return v.has(t) ? v.proj(t) : k_bd; }), *d1);
      auto k_d = derive::apply_under(v.proj(x), k_ab);
      return derive::syllogism(build(k, c2, [&](const Formula& t) { return v.has(t) ? v.proj(t) : k_d; }), *d2);
    }
    return std::nullopt;
  }
};

}  // namespace

SearchResult search_proof(const FormulaSet& gamma, const Formula& goal, const ProverLimits& limits) {
  SearchResult out;
  if (gamma.contains(goal)) {
    out.outcome = SearchOutcome::Proved;
    out.proof = ProofTerm::premise(goal);
    return out;
  }
  Ctx c(gamma.begin(), gamma.end());
  Search s(limits);
  std::optional<Derivation> d;
  try {
    d = s.solve(c, goal);
  } catch (const OutOfSteps&) {
    out.steps = s.steps();
    return out;
  }
  out.steps = s.steps();
  if (!d) {
    out.outcome = SearchOutcome::NotProvable;
    return out;
  }
  Derivation ctx = derive::top_intro();
  for (const auto& g : c) ctx = derive::and_intro(ctx, derive::premise(g));
  Derivation full = derive::modus_ponens(ctx, *d);
  if (check(gamma, full.term) != goal) throw std::logic_error("search_proof: witness does not check");
  out.outcome = SearchOutcome::Proved;
  out.proof = full.term;
  return out;
}

}  // namespace iplkit
