// Decision procedure for provability: a contraction-free sequent search whose
// successful runs are translated into Hilbert proof terms.

#ifndef IPLKIT_PROVER_HPP
#define IPLKIT_PROVER_HPP

#include <cstddef>
#include <optional>

#include "iplkit/catalog.hpp"

namespace iplkit {

struct ProverLimits {
  std::size_t max_steps = 200000;  // sequents expanded before giving up
};

enum class SearchOutcome { Proved, NotProvable, Exhausted };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Exhausted;
  std::optional<ProofTerm> proof;  // set iff outcome == Proved; checks under gamma
  std::size_t steps = 0;
};

// Searches for a proof of gamma |- goal. NotProvable is only returned after
// the search space was exhausted within the limits.
SearchResult search_proof(const FormulaSet& gamma, const Formula& goal, const ProverLimits& limits = {});

}  // namespace iplkit

#endif  // IPLKIT_PROVER_HPP
