// Hilbert-style derivations in Goedel's system for intuitionistic logic.

#ifndef IPLKIT_PROOF_HPP
#define IPLKIT_PROOF_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iplkit/formula.hpp"

namespace iplkit {

enum class Rule : std::uint8_t {
  Premise,
  ContractionDisj,   // (a | a) -> a
  ContractionConj,   // a -> a & a
  WeakeningDisj,     // a -> a | b
  WeakeningConj,     // a & b -> a
  PermutationDisj,   // a | b -> b | a
  PermutationConj,   // a & b -> b & a
  Exfalso,           // bot -> a
  ModusPonens,       // a, a -> b  /  b
  Syllogism,         // a -> b, b -> c  /  a -> c
  Exportation,       // a & b -> c  /  a -> b -> c
  Importation,       // a -> b -> c  /  a & b -> c
  Expansion,         // a -> b  /  c | a -> c | b
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
// Number of formula arguments and subproofs a node of this rule carries.
std::size_t rule_formula_arity(Rule r);
std::size_t rule_subproof_arity(Rule r);

// Immutable derivation tree. Axiom nodes store their instantiating formulas.
// Subterms may be shared, so a term is in general a DAG.
class ProofTerm {
 public:
  static ProofTerm premise(Formula f);
  static ProofTerm contraction_disj(Formula a);
  static ProofTerm contraction_conj(Formula a);
  static ProofTerm weakening_disj(Formula a, Formula b);
  static ProofTerm weakening_conj(Formula a, Formula b);
  static ProofTerm permutation_disj(Formula a, Formula b);
  static ProofTerm permutation_conj(Formula a, Formula b);
  static ProofTerm exfalso(Formula a);
  // minor proves a, major proves a -> b.
  static ProofTerm modus_ponens(ProofTerm minor, ProofTerm major);
  static ProofTerm syllogism(ProofTerm first, ProofTerm second);
  static ProofTerm exportation(ProofTerm p);
  static ProofTerm importation(ProofTerm p);
  static ProofTerm expansion(Formula c, ProofTerm p);

  // Generic constructor; throws std::invalid_argument on an arity mismatch.
  static ProofTerm make(Rule r, std::vector<Formula> formulas, std::vector<ProofTerm> subproofs);

  Rule rule() const noexcept { return node_->rule; }
  const std::vector<Formula>& formulas() const noexcept { return node_->formulas; }
  const std::vector<ProofTerm>& subproofs() const noexcept { return node_->subproofs; }

  // Identity of the shared node, for memo tables.
  const void* id() const noexcept { return node_.get(); }

  // Number of distinct nodes.
  std::size_t dag_size() const;

 private:
  struct Node {
    Rule rule;
    std::vector<Formula> formulas;
    std::vector<ProofTerm> subproofs;
  };
  explicit ProofTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Root-to-node child indices.
using NodePath = std::vector<std::size_t>;
std::string render_path(const NodePath& path);

class ProofError : public std::runtime_error {
 public:
  enum class Kind { PremiseNotInContext, RuleShapeMismatch };

  ProofError(Kind kind, NodePath path, Formula formula, std::string detail);

  Kind kind() const noexcept { return kind_; }
  const NodePath& path() const noexcept { return path_; }
  // The missing premise, or the subproof conclusion that did not fit the rule.
  const Formula& formula() const noexcept { return formula_; }

 private:
  Kind kind_;
  NodePath path_;
  Formula formula_;
};

std::string_view proof_error_kind_name(ProofError::Kind k);

struct Judgment {
  FormulaSet premises;
  Formula conclusion;
};

// Computes the conclusion of p under premises gamma, bottom-up. Throws
// ProofError naming the first offending node in depth-first order.
Formula check(const FormulaSet& gamma, const ProofTerm& p);
Judgment judge(FormulaSet gamma, const ProofTerm& p);

// The same term under a larger premise set. Throws std::invalid_argument if
// smaller is not a subset of larger, ProofError if p does not check.
ProofTerm weaken(const FormulaSet& smaller, const FormulaSet& larger, const ProofTerm& p);

// Replaces every Premise(f) leaf with replacement; other leaves are kept.
ProofTerm substitute_premise(const ProofTerm& p, const Formula& f, const ProofTerm& replacement);

}  // namespace iplkit

#endif  // IPLKIT_PROOF_HPP
