// Finite Kripke models for intuitionistic propositional logic.

#ifndef IPLKIT_KRIPKE_HPP
#define IPLKIT_KRIPKE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iplkit/formula.hpp"

namespace iplkit {

// Bit w is set iff world w is a member.
using WorldSet = std::uint64_t;
constexpr std::size_t kMaxWorlds = 64;

inline WorldSet all_worlds(std::size_t n) { return n >= 64 ? ~WorldSet{0} : (WorldSet{1} << n) - 1; }

class UnknownVariable : public std::out_of_range {
 public:
  explicit UnknownVariable(Var v) : std::out_of_range("unknown variable p" + std::to_string(v.index)), var_(v) {}
  Var var() const noexcept { return var_; }

 private:
  Var var_;
};

class UnknownWorld : public std::out_of_range {
 public:
  explicit UnknownWorld(std::size_t w) : std::out_of_range("unknown world " + std::to_string(w)) {}
};

using Valuation = std::map<Var, WorldSet>;

// Worlds are 0..num_worlds-1; successors(w) is the row {w' : R(w, w')}.
// The valuation maps each declared variable v to {w : V(v, w)}.
// Construction checks shapes only; see validate_model.
class KripkeModel {
 public:
  KripkeModel(std::vector<WorldSet> successors, Valuation valuation);

  // Relation given by edges; the reflexive-transitive closure is taken.
  static KripkeModel from_edges(std::size_t num_worlds, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                Valuation valuation);

  std::size_t num_worlds() const noexcept { return succ_.size(); }
  WorldSet successors(std::size_t w) const;
  bool related(std::size_t from, std::size_t to) const;
  // Throws UnknownVariable for undeclared variables.
  WorldSet truth(Var v) const;
  bool declares(Var v) const { return val_.contains(v); }

  const std::vector<WorldSet>& relation_rows() const noexcept { return succ_; }
  const Valuation& valuation() const noexcept { return val_; }

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  std::vector<WorldSet> succ_;
  Valuation val_;
};

// Reflexive-transitive closure of a relation given by rows.
std::vector<WorldSet> preorder_closure(std::vector<WorldSet> rows);

struct Violation {
  enum class Kind { Reflexivity, Transitivity, Monotonicity };
  Kind kind;
  // Reflexivity: {w}; Transitivity: {w1, w2, w3}; Monotonicity: {v, w1, w2}.
  std::vector<std::size_t> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

// Empty iff R is a preorder and every variable is upward persistent.
std::vector<Violation> validate_model(const KripkeModel& m);

// {w : M, w forces f}. Throws UnknownVariable.
WorldSet truth_set(const KripkeModel& m, const Formula& f);
// Throws UnknownWorld, UnknownVariable.
bool eval(const KripkeModel& m, std::size_t w, const Formula& f);
bool valid_in_model(const KripkeModel& m, const Formula& f);
bool forces_set(const KripkeModel& m, std::size_t w, const FormulaSet& gamma);
WorldSet forcing_worlds(const KripkeModel& m, const FormulaSet& gamma);

struct ConsequenceResult {
  bool holds = true;
  std::size_t model = 0;  // when !holds: index of the refuting model
  std::size_t world = 0;  // and the world that forces gamma but not phi
};

ConsequenceResult sem_conseq_over(const std::vector<KripkeModel>& models, const FormulaSet& gamma,
                                  const Formula& phi);

// One representative per isomorphism class of models with exactly
// num_worlds worlds over variables p0..p(num_vars-1).
//
// A labelling is canonical when it is topologically sorted (R(i, j) with
// i > j implies R(j, i)) and its key is least among all topologically sorted
// relabellings. The key compares the relation code (bit i*n + j set iff
// R(i, j)) first and then the truth sets of p0, p1, ... as numbers. Output
// is sorted by key.
std::vector<KripkeModel> enumerate_models(std::size_t num_vars, std::size_t num_worlds);

// The same with the declared variables `vars`.
std::vector<KripkeModel> enumerate_models_over(const VarSet& vars, std::size_t num_worlds);

struct Countermodel {
  KripkeModel model;
  std::size_t world;
};

// First (model, world) by world count, then enumeration order, then world
// index, where the world forces gamma but not phi. The models declare
// exactly the variables of gamma and phi.
std::optional<Countermodel> countermodel_search(const FormulaSet& gamma, const Formula& phi, std::size_t max_worlds);

// Persistence of every formula of the family along R.
bool check_monotone_eval(const KripkeModel& m, const std::vector<Formula>& family);

}  // namespace iplkit

#endif  // IPLKIT_KRIPKE_HPP
