// Provable equivalence under a context and its quotient over a finite
// universe of formulas.

#ifndef IPLKIT_LINDENBAUM_HPP
#define IPLKIT_LINDENBAUM_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "iplkit/theories.hpp"

namespace iplkit {

struct EquivVerdict {
  Truth truth = Truth::Unknown;
  std::optional<ProofTerm> proof;            // Holds: gamma |- the biconditional (or implication)
  std::optional<Countermodel> countermodel;  // Fails: refutes one direction under gamma
  std::string note;
};

EquivVerdict equiv(const FormulaSet& gamma, const Formula& phi, const Formula& psi, const Oracle& oracle);
EquivVerdict class_le(const FormulaSet& gamma, const Formula& phi, const Formula& psi, const Oracle& oracle);

class OutOfUniverse : public std::out_of_range {
 public:
  explicit OutOfUniverse(const Formula& f) : std::out_of_range(render(f) + " is outside the universe") {}
};

struct QuotientTable {
  FormulaSet gamma;
  FormulaUniverse universe;
  std::vector<std::vector<std::size_t>> classes;  // universe indices, in universe order
  std::vector<std::size_t> class_of;               // per universe index
  std::vector<Formula> representative;             // least code in the class
  std::vector<bool> provable_top;                  // gamma |- representative
  std::vector<std::vector<bool>> le;               // le[i][j]: gamma |- rep_i -> rep_j
};

// Classes appear in order of their first member. Throws OracleInconclusive
// when any needed verdict is Unknown.
QuotientTable build_quotient(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle);

// Class of f. Throws OutOfUniverse.
std::size_t h_quot(const QuotientTable& t, const Formula& f);

// Same classes in, same class out, for every in-universe combination by
// and, or and implies.
bool quotient_op_check(const QuotientTable& t);
bool quotient_op_check(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle);

// The class of op(a, b) equals the class of op(rep [a], rep [b]) whenever
// both formulas lie in the universe.
bool h_quot_compositional(const QuotientTable& t);

// Every premise lands in a provable class, and for every formula of the
// universe: its class is provable iff the oracle proves it.
bool true_in_lt_check(const QuotientTable& t, const Oracle& oracle);
bool true_in_lt_check(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle);

}  // namespace iplkit

#endif  // IPLKIT_LINDENBAUM_HPP
