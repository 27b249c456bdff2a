// Derived theorems and rules built from the primitive Hilbert rules, and the
// deduction theorem as a transformation on proof terms.

#ifndef IPLKIT_CATALOG_HPP
#define IPLKIT_CATALOG_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "iplkit/proof.hpp"

namespace iplkit {

// A proof term together with the conclusion it is claimed to have. The claim
// is maintained by the builders below and confirmed by check().
struct Derivation {
  ProofTerm term;
  Formula conclusion;
};

// Builders throw std::invalid_argument when an argument's conclusion does not
// have the shape the rule needs.
namespace derive {

// Primitive rules lifted to derivations.
Derivation axiom(ProofTerm axiom_node);
Derivation premise(const Formula& f);
Derivation modus_ponens(const Derivation& minor, const Derivation& major);
Derivation syllogism(const Derivation& first, const Derivation& second);
Derivation exportation(const Derivation& d);
Derivation importation(const Derivation& d);
Derivation expansion(const Formula& c, const Derivation& d);

// Theorems (valid under any premises).
Derivation identity(const Formula& a);                                   // a -> a
Derivation top_intro();                                                  // top
Derivation k_axiom(const Formula& a, const Formula& b);                  // a -> b -> a
Derivation and_elim_left(const Formula& a, const Formula& b);            // a & b -> a
Derivation and_elim_right(const Formula& a, const Formula& b);           // a & b -> b
Derivation or_intro_left(const Formula& a, const Formula& b);            // a -> a | b
Derivation or_intro_right(const Formula& a, const Formula& b);           // b -> a | b
Derivation disj_of_and_elim_left(const Formula& a, const Formula& b, const Formula& c);  // a & b -> a | c
Derivation apply(const Formula& a, const Formula& b);                    // (a -> b) & a -> b
Derivation pair(const Formula& a, const Formula& b);                     // a -> b -> a & b
Derivation imp_chain(const Formula& a, const Formula& b, const Formula& c);  // (b -> c) -> (a -> b) -> a -> c
Derivation dni(const Formula& a);                                        // a -> ~~a
Derivation conj_assoc(const Formula& a, const Formula& b, const Formula& c);      // (a & b) & c -> a & (b & c)
Derivation conj_assoc_inv(const Formula& a, const Formula& b, const Formula& c);  // a & (b & c) -> (a & b) & c
Derivation distrib(const Formula& a, const Formula& b, const Formula& c);         // a & (b | c) -> a & b | a & c

// Rules.
Derivation and_intro(const Derivation& a, const Derivation& b);          // a, b / a & b
Derivation or_elim(const Derivation& ac, const Derivation& bc);          // a -> c, b -> c / a | b -> c
Derivation conj_monotone(const Formula& c, const Derivation& ab);        // a -> b / c & a -> c & b
Derivation conj_monotone_right(const Formula& c, const Derivation& ab);  // a -> b / a & c -> b & c
Derivation pair_imp(const Derivation& xa, const Derivation& xb);         // x -> a, x -> b / x -> a & b
Derivation neg_elim(const Derivation& a, const Derivation& not_a);       // a, ~a / bot
Derivation ex_falso(const Derivation& bot, const Formula& a);            // bot / a
Derivation iff_intro(const Derivation& ab, const Derivation& ba);        // a -> b, b -> a / a <-> b
Derivation iff_elim_left(const Derivation& iff);                         // a <-> b / a -> b
Derivation iff_elim_right(const Derivation& iff);                        // a <-> b / b -> a
Derivation constant(const Derivation& a, const Formula& k);              // a / k -> a

// Reasoning under a fixed antecedent k.
Derivation apply_under(const Derivation& k_ab, const Derivation& k_a);   // k -> a -> b, k -> a / k -> b
Derivation post_compose(const Derivation& k_ab, const Derivation& bc);   // k -> a -> b, b -> c / k -> a -> c
Derivation pre_compose(const Derivation& k_ab, const Derivation& ca);    // k -> a -> b, c -> a / k -> c -> b
Derivation export_under(const Derivation& k_abc);                        // k -> (a & b -> c) / k -> a -> b -> c

}  // namespace derive

// One entry of the named catalog. A schema is instantiated with `arity`
// formulas; it advertises hypotheses (empty for theorems) and a conclusion.
struct CatalogEntry {
  std::string name;
  std::size_t arity;
  std::function<std::vector<Formula>(std::span<const Formula>)> hypotheses;
  std::function<Formula(std::span<const Formula>)> conclusion;
  // Receives one derivation per hypothesis, in order.
  std::function<Derivation(std::span<const Formula>, std::span<const Derivation>)> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Builds the named entry. `proofs` supplies one derivation per hypothesis;
// their conclusions must match the advertised hypotheses.
Derivation derived(const std::string& name, std::span<const Formula> formulas,
                   std::span<const Derivation> proofs = {});

// Instantiates the entry with Premise leaves for its hypotheses. Returns the
// premise set and the derivation.
std::pair<FormulaSet, Derivation> instantiate(const CatalogEntry& entry, std::span<const Formula> formulas);

// From a proof of psi under gamma + {hyp}, a proof of hyp -> psi under gamma.
// Throws ProofError if p does not check under gamma + {hyp}.
ProofTerm deduction_theorem(const FormulaSet& gamma, const Formula& hyp, const ProofTerm& p);

}  // namespace iplkit

#endif  // IPLKIT_CATALOG_HPP
