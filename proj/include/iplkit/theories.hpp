// Provability oracle, theory predicates and consistent pairs over finite
// formula universes.

#ifndef IPLKIT_THEORIES_HPP
#define IPLKIT_THEORIES_HPP

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iplkit/kripke.hpp"
#include "iplkit/prover.hpp"

namespace iplkit {

// A duplicate-free list of formulas; enumeration is list position.
class FormulaUniverse {
 public:
  FormulaUniverse() = default;
  // Throws std::invalid_argument on duplicates.
  explicit FormulaUniverse(std::vector<Formula> items);

  // All formulas over p0..p(num_vars-1) and bot with connective depth <=
  // max_depth, sorted by code.
  static FormulaUniverse canonical(std::size_t num_vars, std::size_t max_depth);

  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<Formula>& items() const noexcept { return items_; }
  const Formula& enumeration(std::size_t i) const { return items_.at(i); }
  std::optional<std::size_t> code(const Formula& f) const;
  bool contains(const Formula& f) const { return index_.contains(f); }

 private:
  std::vector<Formula> items_;
  std::map<Formula, std::size_t> index_;
};

struct FormulaPair {
  FormulaSet left;
  FormulaSet right;
  friend bool operator==(const FormulaPair&, const FormulaPair&) = default;
};

struct OracleBudget {
  std::size_t max_worlds = 3;
  std::size_t max_steps = 200000;

  // IPLKIT_BUDGET="worlds[,steps]"; defaults for anything missing.
  // Throws std::invalid_argument on malformed text.
  static OracleBudget parse(const std::string& text);
  static OracleBudget from_env();
  std::string describe() const;
};

struct ProvabilityVerdict {
  enum class Kind { Provable, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ProofTerm> witness;          // Provable
  std::optional<Countermodel> countermodel;  // Refuted
  std::string note;                          // Unknown: what ran out

  bool provable() const { return kind == Kind::Provable; }
  bool refuted() const { return kind == Kind::Refuted; }
  bool unknown() const { return kind == Kind::Unknown; }
};

std::string_view kind_name(ProvabilityVerdict::Kind k);

// Decides gamma |- phi with certificates. Proofs come from a few catalog
// shortcuts and then the sequent search; refutations from bounded
// countermodel search. Every certificate is re-verified before it is
// returned. Verdicts are cached; safe for concurrent use.
class Oracle {
 public:
  explicit Oracle(OracleBudget budget = OracleBudget::from_env()) : budget_(budget) {}

  ProvabilityVerdict provable(const FormulaSet& gamma, const Formula& phi) const;
  const OracleBudget& budget() const noexcept { return budget_; }

 private:
  ProvabilityVerdict decide(const FormulaSet& gamma, const Formula& phi) const;

  OracleBudget budget_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<FormulaSet, Formula>, ProvabilityVerdict> cache_;
};

ProvabilityVerdict oracle_provable(const FormulaSet& gamma, const Formula& phi, const OracleBudget& budget);

enum class Truth { Holds, Fails, Unknown };
std::string_view truth_name(Truth t);

struct TheoryVerdict {
  Truth truth = Truth::Unknown;
  std::vector<Formula> witness;  // the offending formula(s) when Fails
  std::optional<ProofTerm> proof;
  std::vector<Countermodel> refutations;
};

// Fails with phi in u \ gamma that gamma proves.
TheoryVerdict is_ded_closed(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle);
// Holds iff gamma |- bot is refuted; Fails carries the proof.
TheoryVerdict is_consistent(const FormulaSet& gamma, const Oracle& oracle);
// Fails with (a, b) when gamma proves a | b in u but neither disjunct.
TheoryVerdict is_disjunctive(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle);

struct PairVerdict {
  Truth truth = Truth::Unknown;
  // Fails: the first subset pair (by size, then codes) whose implication is
  // provable, and its proof.
  std::optional<FormulaPair> subsets;
  std::optional<ProofTerm> proof;
  // Holds: a world forcing every left formula and no right formula. It
  // refutes every subset-pair implication at once.
  std::optional<Countermodel> certificate;
  std::string note;
};

// fold_conj of the items in code order with seed top, implying fold_disj
// with seed bot.
Formula pair_implication(const FormulaSet& phi, const FormulaSet& omega);

PairVerdict pair_consistent(const FormulaPair& pair, const Oracle& oracle);

class OracleInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AddStep {
  FormulaPair result;
  bool went_left = false;
  PairVerdict verdict;  // consistency certificate of result
};

// Puts phi on the left if that keeps the pair consistent, else on the
// right. Throws OracleInconclusive, or std::invalid_argument when the input
// pair is not consistent.
AddStep add_formula_step(const FormulaPair& pair, const Formula& phi, const Oracle& oracle);
FormulaPair add_formula_to_pair(const FormulaPair& pair, const Formula& phi, const Oracle& oracle);

struct Saturation {
  FormulaPair result;
  std::vector<FormulaPair> trace;  // trace[0] is the input, trace[i + 1] follows enumeration(i)
  std::vector<AddStep> steps;
};

// Throws OracleInconclusive (no partial result) or std::invalid_argument when
// the input is not consistent or not inside u.
Saturation saturate_pair(const FormulaPair& pair, const FormulaUniverse& u, const Oracle& oracle);

// Both components grow monotonically along the trace.
bool family_increasing(const std::vector<FormulaPair>& trace);
bool family_increasing_check(const FormulaPair& pair, const FormulaUniverse& u, const Oracle& oracle);

}  // namespace iplkit

#endif  // IPLKIT_THEORIES_HPP
