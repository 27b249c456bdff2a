#include "iplkit/catalog.hpp"

#include <optional>
#include <unordered_map>

namespace iplkit {

namespace {

using F = Formula;

[[noreturn]] void bad_shape(const char* rule, const Formula& found, const char* expected) {
  throw std::invalid_argument(std::string(rule) + ": got " + render(found) + ", expected " + expected);
}

const Formula& expect_imp(const char* rule, const Derivation& d) {
  if (!d.conclusion.is(Connective::Implies)) bad_shape(rule, d.conclusion, "an implication");
  return d.conclusion;
}

}  // namespace

namespace derive {

Derivation axiom(ProofTerm axiom_node) {
  if (axiom_node.rule() == Rule::Premise || !axiom_node.subproofs().empty())
    throw std::invalid_argument("derive::axiom: not an axiom node");
  Formula c = check({}, axiom_node);
  return {std::move(axiom_node), std::move(c)};
}

Derivation premise(const Formula& f) { return {ProofTerm::premise(f), f}; }

Derivation modus_ponens(const Derivation& minor, const Derivation& major) {
  const auto& m = expect_imp("modus_ponens", major);
  if (m.lhs() != minor.conclusion) bad_shape("modus_ponens", m, "an implication from the minor premise");
  return {ProofTerm::modus_ponens(minor.term, major.term), m.rhs()};
}

Derivation syllogism(const Derivation& first, const Derivation& second) {
  const auto& a = expect_imp("syllogism", first);
  const auto& b = expect_imp("syllogism", second);
  if (b.lhs() != a.rhs()) bad_shape("syllogism", b, "an implication continuing the first");
  return {ProofTerm::syllogism(first.term, second.term), F::implies(a.lhs(), b.rhs())};
}

Derivation exportation(const Derivation& d) {
  const auto& c = expect_imp("exportation", d);
  if (!c.lhs().is(Connective::And)) bad_shape("exportation", c, "a & b -> c");
  return {ProofTerm::exportation(d.term), F::implies(c.lhs().lhs(), F::implies(c.lhs().rhs(), c.rhs()))};
}

Derivation importation(const Derivation& d) {
  const auto& c = expect_imp("importation", d);
  if (!c.rhs().is(Connective::Implies)) bad_shape("importation", c, "a -> b -> c");
  return {ProofTerm::importation(d.term), F::implies(F::conj(c.lhs(), c.rhs().lhs()), c.rhs().rhs())};
}

Derivation expansion(const Formula& ctx, const Derivation& d) {
  const auto& c = expect_imp("expansion", d);
  return {ProofTerm::expansion(ctx, d.term), F::implies(F::disj(ctx, c.lhs()), F::disj(ctx, c.rhs()))};
}

Derivation identity(const Formula& a) {
  return syllogism(axiom(ProofTerm::contraction_conj(a)), axiom(ProofTerm::weakening_conj(a, a)));
}

Derivation top_intro() { return axiom(ProofTerm::exfalso(F::bottom())); }

Derivation k_axiom(const Formula& a, const Formula& b) {
  return exportation(axiom(ProofTerm::weakening_conj(a, b)));
}

Derivation and_elim_left(const Formula& a, const Formula& b) {
  return axiom(ProofTerm::weakening_conj(a, b));
}

Derivation and_elim_right(const Formula& a, const Formula& b) {
  return syllogism(axiom(ProofTerm::permutation_conj(a, b)), axiom(ProofTerm::weakening_conj(b, a)));
}

Derivation or_intro_left(const Formula& a, const Formula& b) {
  return axiom(ProofTerm::weakening_disj(a, b));
}

Derivation or_intro_right(const Formula& a, const Formula& b) {
  return syllogism(axiom(ProofTerm::weakening_disj(b, a)), axiom(ProofTerm::permutation_disj(b, a)));
}

Derivation disj_of_and_elim_left(const Formula& a, const Formula& b, const Formula& c) {
  return syllogism(axiom(ProofTerm::weakening_conj(a, b)), axiom(ProofTerm::weakening_disj(a, c)));
}

Derivation apply(const Formula& a, const Formula& b) { return importation(identity(F::implies(a, b))); }

Derivation pair(const Formula& a, const Formula& b) { return exportation(identity(F::conj(a, b))); }

Derivation conj_monotone(const Formula& c, const Derivation& ab) {
  const auto& imp = expect_imp("conj_monotone", ab);
  const Formula& a = imp.lhs();
  const Formula& b = imp.rhs();
  // a -> c -> c & b, then a & c -> c & b
  auto curried = syllogism(ab, exportation(axiom(ProofTerm::permutation_conj(b, c))));
  return syllogism(axiom(ProofTerm::permutation_conj(c, a)), importation(curried));
}

Derivation conj_monotone_right(const Formula& c, const Derivation& ab) {
  const auto& imp = expect_imp("conj_monotone_right", ab);
  return importation(syllogism(ab, pair(imp.rhs(), c)));
}

Derivation pair_imp(const Derivation& xa, const Derivation& xb) {
  const auto& l = expect_imp("pair_imp", xa);
  const auto& r = expect_imp("pair_imp", xb);
  if (l.lhs() != r.lhs()) bad_shape("pair_imp", r, "an implication with the same antecedent");
  const Formula& x = l.lhs();
  auto dup = axiom(ProofTerm::contraction_conj(x));
  return syllogism(syllogism(dup, conj_monotone_right(x, xa)), conj_monotone(l.rhs(), xb));
}

Derivation conj_assoc(const Formula& a, const Formula& b, const Formula& c) {
  const F ab = F::conj(a, b);
  auto first = axiom(ProofTerm::weakening_conj(ab, c));
  auto xa = syllogism(first, and_elim_left(a, b));
  auto xb = syllogism(first, and_elim_right(a, b));
  auto xc = and_elim_right(ab, c);
  return pair_imp(xa, pair_imp(xb, xc));
}

Derivation conj_assoc_inv(const Formula& a, const Formula& b, const Formula& c) {
  const F bc = F::conj(b, c);
  auto rest = and_elim_right(a, bc);
  auto xa = and_elim_left(a, bc);
  auto xb = syllogism(rest, and_elim_left(b, c));
  auto xc = syllogism(rest, and_elim_right(b, c));
  return pair_imp(pair_imp(xa, xb), xc);
}

Derivation imp_chain(const Formula& a, const Formula& b, const Formula& c) {
  const F bc = F::implies(b, c);
  const F ab = F::implies(a, b);
  // ((b -> c) & (a -> b)) & a -> c, curried twice.
  auto body = syllogism(conj_assoc(bc, ab, a), syllogism(conj_monotone(bc, apply(a, b)), apply(b, c)));
  return exportation(exportation(body));
}

Derivation dni(const Formula& a) {
  const F na = F::neg(a);
  return exportation(syllogism(axiom(ProofTerm::permutation_conj(a, na)), apply(a, F::bottom())));
}

Derivation post_compose(const Derivation& k_ab, const Derivation& bc) {
  return exportation(syllogism(importation(k_ab), bc));
}

Derivation pre_compose(const Derivation& k_ab, const Derivation& ca) {
  const auto& imp = expect_imp("pre_compose", k_ab);
  return exportation(syllogism(conj_monotone(imp.lhs(), ca), importation(k_ab)));
}

Derivation apply_under(const Derivation& k_ab, const Derivation& k_a) {
  const auto& imp = expect_imp("apply_under", k_ab);
  if (!imp.rhs().is(Connective::Implies)) bad_shape("apply_under", imp, "k -> a -> b");
  return syllogism(pair_imp(k_ab, k_a), apply(imp.rhs().lhs(), imp.rhs().rhs()));
}

Derivation export_under(const Derivation& k_abc) {
  const auto& imp = expect_imp("export_under", k_abc);
  if (!imp.rhs().is(Connective::Implies) || !imp.rhs().lhs().is(Connective::And))
    bad_shape("export_under", imp, "k -> (a & b -> c)");
  const Formula& k = imp.lhs();
  const Formula& a = imp.rhs().lhs().lhs();
  const Formula& b = imp.rhs().lhs().rhs();
  return exportation(exportation(syllogism(conj_assoc(k, a, b), importation(k_abc))));
}

Derivation distrib(const Formula& a, const Formula& b, const Formula& c) {
  const F ab = F::conj(a, b);
  const F ac = F::conj(a, c);
  auto from_b = post_compose(exportation(axiom(ProofTerm::permutation_conj(b, a))), or_intro_left(ab, ac));
  auto from_c = post_compose(exportation(axiom(ProofTerm::permutation_conj(c, a))), or_intro_right(ab, ac));
  auto swapped = importation(or_elim(from_b, from_c));  // (b | c) & a -> ab | ac
  return syllogism(axiom(ProofTerm::permutation_conj(a, F::disj(b, c))), swapped);
}

Derivation and_intro(const Derivation& a, const Derivation& b) {
  return modus_ponens(b, modus_ponens(a, pair(a.conclusion, b.conclusion)));
}

Derivation or_elim(const Derivation& ac, const Derivation& bc) {
  const auto& l = expect_imp("or_elim", ac);
  const auto& r = expect_imp("or_elim", bc);
  if (l.rhs() != r.rhs()) bad_shape("or_elim", r, "an implication with the same consequent");
  const Formula& a = l.lhs();
  const Formula& c = l.rhs();
  auto step = syllogism(expansion(a, bc), axiom(ProofTerm::permutation_disj(a, c)));  // a | b -> c | a
  step = syllogism(step, expansion(c, ac));                                             // -> c | c
  return syllogism(step, axiom(ProofTerm::contraction_disj(c)));
}

Derivation neg_elim(const Derivation& a, const Derivation& not_a) {
  const auto& n = expect_imp("neg_elim", not_a);
  if (!n.rhs().is_bottom()) bad_shape("neg_elim", n, "a negation");
  return modus_ponens(a, not_a);
}

Derivation ex_falso(const Derivation& bot, const Formula& a) {
  if (!bot.conclusion.is_bottom()) bad_shape("ex_falso", bot.conclusion, "bot");
  return modus_ponens(bot, axiom(ProofTerm::exfalso(a)));
}

Derivation iff_intro(const Derivation& ab, const Derivation& ba) {
  const auto& l = expect_imp("iff_intro", ab);
  const auto& r = expect_imp("iff_intro", ba);
  if (l.lhs() != r.rhs() || l.rhs() != r.lhs()) bad_shape("iff_intro", r, "the converse implication");
  return and_intro(ab, ba);
}

namespace {

std::pair<Formula, Formula> iff_sides(const char* rule, const Derivation& d) {
  const auto& c = d.conclusion;
  if (!c.is(Connective::And) || !c.lhs().is(Connective::Implies) || !c.rhs().is(Connective::Implies) ||
      c.lhs().lhs() != c.rhs().rhs() || c.lhs().rhs() != c.rhs().lhs())
    bad_shape(rule, c, "a <-> b");
  return {c.lhs(), c.rhs()};
}

}  // namespace

Derivation iff_elim_left(const Derivation& iff) {
  auto [ab, ba] = iff_sides("iff_elim_left", iff);
  return modus_ponens(iff, and_elim_left(ab, ba));
}

Derivation iff_elim_right(const Derivation& iff) {
  auto [ab, ba] = iff_sides("iff_elim_right", iff);
  return modus_ponens(iff, and_elim_right(ab, ba));
}

Derivation constant(const Derivation& a, const Formula& k) {
  return modus_ponens(a, k_axiom(a.conclusion, k));
}

}  // namespace derive

// ---------------------------------------------------------------------------

namespace {

using Params = std::span<const Formula>;
using Proofs = std::span<const Derivation>;

CatalogEntry theorem(std::string name, std::size_t arity, std::function<Formula(Params)> concl,
                     std::function<Derivation(Params)> build) {
  return CatalogEntry{std::move(name), arity, [](Params) { return std::vector<Formula>{}; }, std::move(concl),
                      [b = std::move(build)](Params f, Proofs) { return b(f); }};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(theorem("identity", 1, [](Params f) { return F::implies(f[0], f[0]); },
                      [](Params f) { return derive::identity(f[0]); }));
  c.push_back(theorem("topIntro", 0, [](Params) { return F::top(); }, [](Params) { return derive::top_intro(); }));
  c.push_back(theorem("kAxiom", 2, [](Params f) { return F::implies(f[0], F::implies(f[1], f[0])); },
                      [](Params f) { return derive::k_axiom(f[0], f[1]); }));
  c.push_back(theorem("andElimLeft", 2, [](Params f) { return F::implies(F::conj(f[0], f[1]), f[0]); },
                      [](Params f) { return derive::and_elim_left(f[0], f[1]); }));
  c.push_back(theorem("andElimRight", 2, [](Params f) { return F::implies(F::conj(f[0], f[1]), f[1]); },
                      [](Params f) { return derive::and_elim_right(f[0], f[1]); }));
  c.push_back(theorem("orIntroLeft", 2, [](Params f) { return F::implies(f[0], F::disj(f[0], f[1])); },
                      [](Params f) { return derive::or_intro_left(f[0], f[1]); }));
  c.push_back(theorem("orIntroRight", 2, [](Params f) { return F::implies(f[1], F::disj(f[0], f[1])); },
                      [](Params f) { return derive::or_intro_right(f[0], f[1]); }));
  c.push_back(theorem("disjOfAndElimLeft", 3,
                      [](Params f) { return F::implies(F::conj(f[0], f[1]), F::disj(f[0], f[2])); },
                      [](Params f) { return derive::disj_of_and_elim_left(f[0], f[1], f[2]); }));
  c.push_back(theorem("applyTheorem", 2,
                      [](Params f) { return F::implies(F::conj(F::implies(f[0], f[1]), f[0]), f[1]); },
                      [](Params f) { return derive::apply(f[0], f[1]); }));
  c.push_back(theorem("pairTheorem", 2,
                      [](Params f) { return F::implies(f[0], F::implies(f[1], F::conj(f[0], f[1]))); },
                      [](Params f) { return derive::pair(f[0], f[1]); }));
  c.push_back(theorem("impChain", 3,
                      [](Params f) {
                        return F::implies(F::implies(f[1], f[2]),
                                          F::implies(F::implies(f[0], f[1]), F::implies(f[0], f[2])));
                      },
                      [](Params f) { return derive::imp_chain(f[0], f[1], f[2]); }));
  c.push_back(theorem("dniRule", 1, [](Params f) { return F::implies(f[0], F::neg(F::neg(f[0]))); },
                      [](Params f) { return derive::dni(f[0]); }));
  c.push_back(theorem("conjAssoc", 3,
                      [](Params f) {
                        return F::implies(F::conj(F::conj(f[0], f[1]), f[2]), F::conj(f[0], F::conj(f[1], f[2])));
                      },
                      [](Params f) { return derive::conj_assoc(f[0], f[1], f[2]); }));
  c.push_back(theorem("conjAssocInv", 3,
                      [](Params f) {
                        return F::implies(F::conj(f[0], F::conj(f[1], f[2])), F::conj(F::conj(f[0], f[1]), f[2]));
                      },
                      [](Params f) { return derive::conj_assoc_inv(f[0], f[1], f[2]); }));
  c.push_back(theorem("distrib", 3,
                      [](Params f) {
                        return F::implies(F::conj(f[0], F::disj(f[1], f[2])),
                                          F::disj(F::conj(f[0], f[1]), F::conj(f[0], f[2])));
                      },
                      [](Params f) { return derive::distrib(f[0], f[1], f[2]); }));

  c.push_back({"andIntroRule", 2, [](Params f) { return std::vector<Formula>{f[0], f[1]}; },
               [](Params f) { return F::conj(f[0], f[1]); },
               [](Params, Proofs p) { return derive::and_intro(p[0], p[1]); }});
  c.push_back({"orElimRule", 3,
               [](Params f) { return std::vector<Formula>{F::implies(f[0], f[2]), F::implies(f[1], f[2])}; },
               [](Params f) { return F::implies(F::disj(f[0], f[1]), f[2]); },
               [](Params, Proofs p) { return derive::or_elim(p[0], p[1]); }});
  c.push_back({"conjMonotone", 3, [](Params f) { return std::vector<Formula>{F::implies(f[0], f[1])}; },
               [](Params f) { return F::implies(F::conj(f[2], f[0]), F::conj(f[2], f[1])); },
               [](Params f, Proofs p) { return derive::conj_monotone(f[2], p[0]); }});
  c.push_back({"conjMonotoneRight", 3, [](Params f) { return std::vector<Formula>{F::implies(f[0], f[1])}; },
               [](Params f) { return F::implies(F::conj(f[0], f[2]), F::conj(f[1], f[2])); },
               [](Params f, Proofs p) { return derive::conj_monotone_right(f[2], p[0]); }});
  c.push_back({"pairImp", 3,
               [](Params f) { return std::vector<Formula>{F::implies(f[0], f[1]), F::implies(f[0], f[2])}; },
               [](Params f) { return F::implies(f[0], F::conj(f[1], f[2])); },
               [](Params, Proofs p) { return derive::pair_imp(p[0], p[1]); }});
  c.push_back({"negElim", 1, [](Params f) { return std::vector<Formula>{f[0], F::neg(f[0])}; },
               [](Params) { return F::bottom(); },
               [](Params, Proofs p) { return derive::neg_elim(p[0], p[1]); }});
  c.push_back({"exFalsoRule", 1, [](Params) { return std::vector<Formula>{F::bottom()}; },
               [](Params f) { return f[0]; }, [](Params f, Proofs p) { return derive::ex_falso(p[0], f[0]); }});
  c.push_back({"iffIntro", 2,
               [](Params f) { return std::vector<Formula>{F::implies(f[0], f[1]), F::implies(f[1], f[0])}; },
               [](Params f) { return F::iff(f[0], f[1]); },
               [](Params, Proofs p) { return derive::iff_intro(p[0], p[1]); }});
  c.push_back({"iffElimL", 2, [](Params f) { return std::vector<Formula>{F::iff(f[0], f[1])}; },
               [](Params f) { return F::implies(f[0], f[1]); },
               [](Params, Proofs p) { return derive::iff_elim_left(p[0]); }});
  c.push_back({"iffElimR", 2, [](Params f) { return std::vector<Formula>{F::iff(f[0], f[1])}; },
               [](Params f) { return F::implies(f[1], f[0]); },
               [](Params, Proofs p) { return derive::iff_elim_right(p[0]); }});
  c.push_back({"constantRule", 2, [](Params f) { return std::vector<Formula>{f[0]}; },
               [](Params f) { return F::implies(f[1], f[0]); },
               [](Params f, Proofs p) { return derive::constant(p[0], f[1]); }});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

Derivation derived(const std::string& name, std::span<const Formula> formulas, std::span<const Derivation> proofs) {
  const auto& e = catalog_entry(name);
  if (formulas.size() != e.arity)
    throw ArityMismatch(name + " expects " + std::to_string(e.arity) + " formulas, got " +
                        std::to_string(formulas.size()));
  auto hyps = e.hypotheses(formulas);
  if (proofs.size() != hyps.size())
    throw ArityMismatch(name + " expects " + std::to_string(hyps.size()) + " proofs, got " +
                        std::to_string(proofs.size()));
  for (std::size_t i = 0; i < hyps.size(); ++i)
    if (proofs[i].conclusion != hyps[i])
      throw std::invalid_argument(name + ": proof " + std::to_string(i) + " concludes " +
                                  render(proofs[i].conclusion) + ", expected " + render(hyps[i]));
  Derivation d = e.build(formulas, proofs);
  if (d.conclusion != e.conclusion(formulas))
    throw std::logic_error(name + ": builder produced " + render(d.conclusion));
  return d;
}

std::pair<FormulaSet, Derivation> instantiate(const CatalogEntry& entry, std::span<const Formula> formulas) {
  auto hyps = entry.hypotheses(formulas);
  FormulaSet gamma(hyps.begin(), hyps.end());
  std::vector<Derivation> leaves;
  for (const auto& h : hyps) leaves.push_back(derive::premise(h));
  return {std::move(gamma), derived(entry.name, formulas, leaves)};
}

// ---------------------------------------------------------------------------

ProofTerm deduction_theorem(const FormulaSet& gamma, const Formula& hyp, const ProofTerm& p) {
  FormulaSet extended = gamma;
  extended.insert(hyp);
  check(extended, p);

  struct Step {
    Formula conclusion;       // conclusion of the original node
    bool uses_hyp;
    std::optional<Derivation> lifted;  // hyp -> conclusion, built on demand
  };
  std::unordered_map<const void*, Step> memo;

  // First pass: conclusions and whether the node depends on hyp.
  auto scan = [&](auto& self, const ProofTerm& t) -> const Step& {
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
    bool uses = t.rule() == Rule::Premise && t.formulas()[0] == hyp;
    std::vector<Derivation> subs;
    for (const auto& s : t.subproofs()) {
      const Step& st = self(self, s);
      uses = uses || st.uses_hyp;
      subs.push_back({s, st.conclusion});
    }
    Formula c = [&] {
      switch (t.rule()) {
        case Rule::Premise: return t.formulas()[0];
        case Rule::ModusPonens: return derive::modus_ponens(subs[0], subs[1]).conclusion;
        case Rule::Syllogism: return derive::syllogism(subs[0], subs[1]).conclusion;
        case Rule::Exportation: return derive::exportation(subs[0]).conclusion;
        case Rule::Importation: return derive::importation(subs[0]).conclusion;
        case Rule::Expansion: return derive::expansion(t.formulas()[0], subs[0]).conclusion;
        default: return derive::axiom(t).conclusion;
      }
    }();
    return memo.emplace(t.id(), Step{std::move(c), uses, std::nullopt}).first->second;
  };
  scan(scan, p);

  auto lift = [&](auto& self, const ProofTerm& t) -> Derivation {
    Step& st = memo.at(t.id());
    if (st.lifted) return *st.lifted;
    Derivation out = [&]() -> Derivation {
      if (!st.uses_hyp) return derive::constant(Derivation{t, st.conclusion}, hyp);
      const auto& subs = t.subproofs();
      switch (t.rule()) {
        case Rule::Premise: return derive::identity(hyp);
        case Rule::ModusPonens: return derive::apply_under(self(self, subs[1]), self(self, subs[0]));
        case Rule::Syllogism: {
          auto d1 = derive::importation(self(self, subs[0]));  // h & a -> b
          auto d2 = derive::importation(self(self, subs[1]));  // h & b -> c
          const Formula& a = d1.conclusion.lhs().rhs();
          auto keep = derive::pair_imp(derive::and_elim_left(hyp, a), d1);  // h & a -> h & b
          return derive::exportation(derive::syllogism(keep, d2));
        }
        case Rule::Exportation: return derive::export_under(self(self, subs[0]));
        case Rule::Importation: {
          auto d = self(self, subs[0]);  // h -> a -> b -> c
          const Formula& inner = d.conclusion.rhs();
          auto flat = derive::importation(derive::importation(d));  // (h & a) & b -> c
          auto regroup = derive::conj_assoc_inv(hyp, inner.lhs(), inner.rhs().lhs());
          return derive::exportation(derive::syllogism(regroup, flat));
        }
        case Rule::Expansion: {
          const Formula& c = t.formulas()[0];
          auto d = self(self, subs[0]);  // h -> a -> b
          const Formula& a = d.conclusion.rhs().lhs();
          const Formula& b = d.conclusion.rhs().rhs();
          auto left = derive::syllogism(derive::and_elim_right(hyp, c), derive::or_intro_left(c, b));
          auto right = derive::syllogism(derive::importation(d), derive::or_intro_right(c, b));
          auto body = derive::syllogism(derive::distrib(hyp, c, a), derive::or_elim(left, right));
          return derive::exportation(body);
        }
        default: throw std::logic_error("deduction_theorem: axiom node marked as using the hypothesis");
      }
    }();
    st.lifted = out;
    return out;
  };
  return lift(lift, p).term;
}

}  // namespace iplkit
