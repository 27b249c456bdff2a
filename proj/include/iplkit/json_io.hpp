// JSON readers and writers for proofs, models, algebras and verdicts.

#ifndef IPLKIT_JSON_IO_HPP
#define IPLKIT_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "iplkit/bridge.hpp"
#include "iplkit/lindenbaum.hpp"

namespace iplkit {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numbers when the value fits in 64 bits, decimal strings otherwise.
Json natural_to_json(const Natural& n);
// Accepts an unsigned number or a decimal string.
Natural natural_from_json(const Json& j);

// {"rule": name, "formulas": [...], "subproofs": [...]}
Json proof_to_json(const ProofTerm& p);
ProofTerm proof_from_json(const Json& j);
// Node count of the proof written out as a tree.
std::uint64_t proof_tree_size(const ProofTerm& p);

// {"worlds": N, "rel": [[i, j], ...], "vars": K, "val": {"p0": [...], ...}}
// "rel" lists the non-reflexive pairs of R. "vars" is one more than the
// largest declared index.
Json model_to_json(const KripkeModel& m);
// The relation is closed reflexively and transitively; p0..p(K-1) are
// declared, missing "val" entries are empty. Throws JsonFormatError on shape
// errors or when the closed model fails validate_model.
KripkeModel model_from_json(const Json& j);

Json countermodel_to_json(const Countermodel& c);

// {"name", "size", "le", "bot", "top", "meet", "join", "himp"}
Json algebra_to_json(const FiniteHeytingAlgebra& h);
// "meet", "join" and "himp" are optional and derived from "le" when absent.
// Throws JsonFormatError when validate_algebra reports anything.
FiniteHeytingAlgebra algebra_from_json(const Json& j);

Json elements_to_json(ElementSet s);
Json assignment_to_json(const Assignment& a);
Json formulas_to_json(const FormulaSet& s);
Json pair_to_json(const FormulaPair& p);
Json quotient_to_json(const QuotientTable& t);

}  // namespace iplkit

#endif  // IPLKIT_JSON_IO_HPP
