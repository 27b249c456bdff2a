#include "iplkit/proof.hpp"

#include <array>
#include <unordered_map>
#include <unordered_set>

namespace iplkit {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::size_t formulas;
  std::size_t subproofs;
};

constexpr std::array<RuleInfo, 13> kRules{{
    {Rule::Premise, "premise", 1, 0},
    {Rule::ContractionDisj, "contraction_disj", 1, 0},
    {Rule::ContractionConj, "contraction_conj", 1, 0},
    {Rule::WeakeningDisj, "weakening_disj", 2, 0},
    {Rule::WeakeningConj, "weakening_conj", 2, 0},
    {Rule::PermutationDisj, "permutation_disj", 2, 0},
    {Rule::PermutationConj, "permutation_conj", 2, 0},
    {Rule::Exfalso, "exfalso", 1, 0},
    {Rule::ModusPonens, "modus_ponens", 0, 2},
    {Rule::Syllogism, "syllogism", 0, 2},
    {Rule::Exportation, "exportation", 0, 1},
    {Rule::Importation, "importation", 0, 1},
    {Rule::Expansion, "expansion", 1, 1},
}};

const RuleInfo& info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

}  // namespace

std::string_view rule_name(Rule r) { return info(r).name; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& ri : kRules)
    if (ri.name == name) return ri.rule;
  return std::nullopt;
}

std::size_t rule_formula_arity(Rule r) { return info(r).formulas; }
std::size_t rule_subproof_arity(Rule r) { return info(r).subproofs; }

ProofTerm ProofTerm::make(Rule r, std::vector<Formula> formulas, std::vector<ProofTerm> subproofs) {
  if (formulas.size() != rule_formula_arity(r) || subproofs.size() != rule_subproof_arity(r))
    throw std::invalid_argument("rule " + std::string(rule_name(r)) + " expects " +
                                std::to_string(rule_formula_arity(r)) + " formulas and " +
                                std::to_string(rule_subproof_arity(r)) + " subproofs");
  return ProofTerm(std::make_shared<const Node>(Node{r, std::move(formulas), std::move(subproofs)}));
}

ProofTerm ProofTerm::premise(Formula f) { return make(Rule::Premise, {std::move(f)}, {}); }
ProofTerm ProofTerm::contraction_disj(Formula a) { return make(Rule::ContractionDisj, {std::move(a)}, {}); }
ProofTerm ProofTerm::contraction_conj(Formula a) { return make(Rule::ContractionConj, {std::move(a)}, {}); }
ProofTerm ProofTerm::weakening_disj(Formula a, Formula b) {
  return make(Rule::WeakeningDisj, {std::move(a), std::move(b)}, {});
}
ProofTerm ProofTerm::weakening_conj(Formula a, Formula b) {
  return make(Rule::WeakeningConj, {std::move(a), std::move(b)}, {});
}
ProofTerm ProofTerm::permutation_disj(Formula a, Formula b) {
  return make(Rule::PermutationDisj, {std::move(a), std::move(b)}, {});
}
ProofTerm ProofTerm::permutation_conj(Formula a, Formula b) {
  return make(Rule::PermutationConj, {std::move(a), std::move(b)}, {});
}
ProofTerm ProofTerm::exfalso(Formula a) { return make(Rule::Exfalso, {std::move(a)}, {}); }
ProofTerm ProofTerm::modus_ponens(ProofTerm minor, ProofTerm major) {
  return make(Rule::ModusPonens, {}, {std::move(minor), std::move(major)});
}
ProofTerm ProofTerm::syllogism(ProofTerm first, ProofTerm second) {
  return make(Rule::Syllogism, {}, {std::move(first), std::move(second)});
}
ProofTerm ProofTerm::exportation(ProofTerm p) { return make(Rule::Exportation, {}, {std::move(p)}); }
ProofTerm ProofTerm::importation(ProofTerm p) { return make(Rule::Importation, {}, {std::move(p)}); }
ProofTerm ProofTerm::expansion(Formula c, ProofTerm p) {
  return make(Rule::Expansion, {std::move(c)}, {std::move(p)});
}

std::size_t ProofTerm::dag_size() const {
  std::unordered_set<const void*> seen;
  std::vector<const ProofTerm*> stack{this};
  while (!stack.empty()) {
    const ProofTerm* t = stack.back();
    stack.pop_back();
    if (!seen.insert(t->id()).second) continue;
    for (const auto& s : t->subproofs()) stack.push_back(&s);
  }
  return seen.size();
}

std::string render_path(const NodePath& path) {
  std::string out = "root";
  for (auto i : path) out += "/" + std::to_string(i);
  return out;
}

std::string_view proof_error_kind_name(ProofError::Kind k) {
  return k == ProofError::Kind::PremiseNotInContext ? "PremiseNotInContext" : "RuleShapeMismatch";
}

ProofError::ProofError(Kind kind, NodePath path, Formula formula, std::string detail)
    : std::runtime_error(std::string(proof_error_kind_name(kind)) + " at " + render_path(path) + ": " +
                         detail + " (" + render(formula) + ")"),
      kind_(kind),
      path_(std::move(path)),
      formula_(std::move(formula)) {}

namespace {

class Checker {
 public:
  explicit Checker(const FormulaSet& gamma) : gamma_(gamma) {}

  Formula run(const ProofTerm& p) { return visit(p); }

 private:
  const FormulaSet& gamma_;
  std::unordered_map<const void*, Formula> memo_;
  NodePath path_;

  [[noreturn]] void mismatch(const Formula& found, const std::string& expected) {
    throw ProofError(ProofError::Kind::RuleShapeMismatch, path_, found, "expected " + expected);
  }

  Formula child(const ProofTerm& p, std::size_t i) {
    path_.push_back(i);
    Formula f = visit(p.subproofs()[i]);
    path_.pop_back();
    return f;
  }

  const Formula& need_implication(const Formula& f, std::size_t i, const std::string& what) {
    if (!f.is(Connective::Implies)) {
      path_.push_back(i);
      mismatch(f, what);
    }
    return f;
  }

  Formula visit(const ProofTerm& p) {
    if (auto it = memo_.find(p.id()); it != memo_.end()) return it->second;
    Formula out = compute(p);
    memo_.emplace(p.id(), out);
    return out;
  }

  Formula compute(const ProofTerm& p) {
    using F = Formula;
    const auto& fs = p.formulas();
    switch (p.rule()) {
      case Rule::Premise:
        if (!gamma_.contains(fs[0]))
          throw ProofError(ProofError::Kind::PremiseNotInContext, path_, fs[0], "premise not in context");
        return fs[0];
      case Rule::ContractionDisj: return F::implies(F::disj(fs[0], fs[0]), fs[0]);
      case Rule::ContractionConj: return F::implies(fs[0], F::conj(fs[0], fs[0]));
      case Rule::WeakeningDisj: return F::implies(fs[0], F::disj(fs[0], fs[1]));
      case Rule::WeakeningConj: return F::implies(F::conj(fs[0], fs[1]), fs[0]);
      case Rule::PermutationDisj: return F::implies(F::disj(fs[0], fs[1]), F::disj(fs[1], fs[0]));
      case Rule::PermutationConj: return F::implies(F::conj(fs[0], fs[1]), F::conj(fs[1], fs[0]));
      case Rule::Exfalso: return F::implies(F::bottom(), fs[0]);
      case Rule::ModusPonens: {
        F minor = child(p, 0);
        F major = child(p, 1);
        need_implication(major, 1, "an implication");
        if (major.lhs() != minor) {
          path_.push_back(1);
          mismatch(major, render(minor) + " -> ...");
        }
        return major.rhs();
      }
      case Rule::Syllogism: {
        F first = child(p, 0);
        F second = child(p, 1);
        need_implication(first, 0, "an implication");
        need_implication(second, 1, "an implication");
        if (second.lhs() != first.rhs()) {
          path_.push_back(1);
          mismatch(second, render(first.rhs()) + " -> ...");
        }
        return F::implies(first.lhs(), second.rhs());
      }
      case Rule::Exportation: {
        F f = child(p, 0);
        if (!f.is(Connective::Implies) || !f.lhs().is(Connective::And)) {
          path_.push_back(0);
          mismatch(f, "a & b -> c");
        }
        return F::implies(f.lhs().lhs(), F::implies(f.lhs().rhs(), f.rhs()));
      }
      case Rule::Importation: {
        F f = child(p, 0);
        if (!f.is(Connective::Implies) || !f.rhs().is(Connective::Implies)) {
          path_.push_back(0);
          mismatch(f, "a -> b -> c");
        }
        return F::implies(F::conj(f.lhs(), f.rhs().lhs()), f.rhs().rhs());
      }
      case Rule::Expansion: {
        F f = child(p, 0);
        need_implication(f, 0, "an implication");
        return F::implies(F::disj(fs[0], f.lhs()), F::disj(fs[0], f.rhs()));
      }
    }
    throw std::logic_error("unknown rule");
  }
};

}  // namespace

Formula check(const FormulaSet& gamma, const ProofTerm& p) { return Checker(gamma).run(p); }

Judgment judge(FormulaSet gamma, const ProofTerm& p) {
  Formula c = check(gamma, p);
  return Judgment{std::move(gamma), std::move(c)};
}

ProofTerm weaken(const FormulaSet& smaller, const FormulaSet& larger, const ProofTerm& p) {
  for (const auto& f : smaller)
    if (!larger.contains(f)) throw std::invalid_argument("weaken: target context lacks " + render(f));
  check(smaller, p);
  return p;
}

ProofTerm substitute_premise(const ProofTerm& p, const Formula& f, const ProofTerm& replacement) {
  std::unordered_map<const void*, ProofTerm> memo;
  auto go = [&](auto& self, const ProofTerm& t) -> ProofTerm {
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
    ProofTerm out = t;
    if (t.rule() == Rule::Premise) {
      if (t.formulas()[0] == f) out = replacement;
    } else if (!t.subproofs().empty()) {
      std::vector<ProofTerm> subs;
      bool changed = false;
      for (const auto& s : t.subproofs()) {
        subs.push_back(self(self, s));
        changed = changed || subs.back().id() != s.id();
      }
      if (changed) out = ProofTerm::make(t.rule(), t.formulas(), std::move(subs));
    }
    memo.emplace(t.id(), out);
    return out;
  };
  return go(go, p);
}

}  // namespace iplkit
