// Constructions between Kripke models and Heyting algebras: the algebra of
// closed sets of a model and the frame of prime filters of an algebra.

#ifndef IPLKIT_BRIDGE_HPP
#define IPLKIT_BRIDGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "iplkit/heyting.hpp"
#include "iplkit/kripke.hpp"

namespace iplkit {

// Upward closed world sets, sorted by (size, mask).
std::vector<WorldSet> closed_sets(const KripkeModel& m);

struct ClosedSetAlgebra {
  std::vector<WorldSet> carrier;  // element i is carrier[i]
  FiniteHeytingAlgebra algebra;

  // Throws std::invalid_argument if s is not closed.
  Element element_of(WorldSet s) const;
};

// Intersection, union, and himp(A, B) = union of closed X inside (W \ A) | B.
ClosedSetAlgebra closed_set_algebra(const KripkeModel& m, std::string name = "closed");

// Truth set of f; always closed.
inline WorldSet h_closed(const KripkeModel& m, const Formula& f) { return truth_set(m, f); }

// v -> truth set of v, for each declared variable of m.
Assignment closed_assignment(const ClosedSetAlgebra& a, const KripkeModel& m);

// valid_in_model(m, f) iff h_closed(m, f) is all worlds, and h_closed agrees
// with the algebraic interpretation under closed_assignment.
bool kripke_to_alg_check(const KripkeModel& m, const Formula& f);
// Same, with the closed-set algebra of m already built.
bool kripke_to_alg_check(const KripkeModel& m, const ClosedSetAlgebra& a, const Formula& f);

struct PrimeFilterFrame {
  std::vector<ElementSet> worlds;  // prime filters in canonical order
  KripkeModel model;               // R = inclusion, V(v, P) iff I(v) in P
};

PrimeFilterFrame prime_filter_frame(const FiniteHeytingAlgebra& h, const Assignment& i);

// interpret(i, f) == top iff the frame validates f, and for every prime
// filter P the frame forces f at P iff interpret(i, f) is in P.
bool alg_to_kripke_check(const FiniteHeytingAlgebra& h, const Assignment& i, const Formula& f);
// Same, with frame = prime_filter_frame(h, i).
bool alg_to_kripke_check(const FiniteHeytingAlgebra& h, const PrimeFilterFrame& frame, const Assignment& i,
                         const Formula& f);

// Order isomorphism a -> b (image of each element), if one exists. All
// tables are compared under it.
std::optional<std::vector<Element>> algebra_isomorphism(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b);

// World bijection preserving R and the valuation, if one exists.
std::optional<std::vector<std::size_t>> model_isomorphism(const KripkeModel& a, const KripkeModel& b);

// C2, C3, C4, C5, C2xC2, C3xC2, then the closed-set algebras of the posets
// with 2 and 3 points in enumeration order.
const std::vector<FiniteHeytingAlgebra>& algebra_catalog();

struct HarnessEntry {
  Formula formula;
  bool kripke_valid = true;         // over the supplied models
  bool algebra_valid = true;        // over the supplied algebras
  std::vector<std::string> discrepancies;
};

// For each formula: a model refuting it must have a closed-set algebra that
// refutes it, and an algebra refuting it must have a prime-filter frame that
// refutes it. Any failure is listed as a discrepancy.
std::vector<HarnessEntry> validity_equiv_harness(const std::vector<Formula>& formulas,
                                                 const std::vector<KripkeModel>& models,
                                                 const std::vector<FiniteHeytingAlgebra>& algebras);

}  // namespace iplkit

#endif  // IPLKIT_BRIDGE_HPP
