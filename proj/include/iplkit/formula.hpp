// Formulas of intuitionistic propositional logic, their text syntax and
// their natural-number codes.

#ifndef IPLKIT_FORMULA_HPP
#define IPLKIT_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace iplkit {

using Natural = boost::multiprecision::cpp_int;

struct Var {
  std::uint64_t index = 0;
  friend auto operator<=>(Var, Var) = default;
};

enum class Connective : std::uint8_t { Variable, Bottom, And, Or, Implies };

// Immutable formula tree. Copies share structure; equality and ordering are
// structural.
class Formula {
 public:
  static Formula variable(Var v);
  static Formula variable(std::uint64_t index) { return variable(Var{index}); }
  static Formula bottom();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula binary(Connective c, Formula lhs, Formula rhs);

  // Abbreviations; they build ordinary Implies/And nodes.
  static Formula neg(Formula f) { return implies(std::move(f), bottom()); }
  static Formula top() { return neg(bottom()); }
  static Formula iff(const Formula& a, const Formula& b) {
    return conj(implies(a, b), implies(b, a));
  }

  Connective kind() const noexcept;
  bool is_variable() const noexcept { return kind() == Connective::Variable; }
  bool is_bottom() const noexcept { return kind() == Connective::Bottom; }
  bool is_binary() const noexcept { return kind() >= Connective::And; }
  bool is(Connective c) const noexcept { return kind() == c; }

  // Pre: is_variable().
  Var var() const;
  // Pre: is_binary().
  const Formula& lhs() const;
  const Formula& rhs() const;

  // Connective depth: atoms have depth 0.
  std::size_t depth() const noexcept;
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  Var var;
  std::optional<Formula> lhs, rhs;
  std::size_t depth = 0;
  std::size_t size = 1;
  std::size_t hash = 0;
};

inline Connective Formula::kind() const noexcept { return node_->kind; }
inline std::size_t Formula::depth() const noexcept { return node_->depth; }
inline std::size_t Formula::size() const noexcept { return node_->size; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }

using FormulaSet = std::set<Formula>;
using VarSet = std::set<Var>;

// Syntax errors carry the byte offset of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar, loosest binding first:
//   formula := imp ("<->" formula)?      right associative
//   imp     := disj ("->" imp)?          right associative
//   disj    := conj ("|" conj)*          left associative
//   conj    := neg ("&" neg)*            left associative
//   neg     := "~" neg | atom
//   atom    := "bot" | "top" | p<digits> | "(" formula ")"
// `~a`, `top` and `a <-> b` expand to their defining Implies/And trees.
Formula parse(std::string_view text);

// Comma separated list; empty or all-blank text gives the empty set.
FormulaSet parse_set(std::string_view text);

// Minimal parentheses under the grammar above. Never emits `~`, `top` or
// `<->`, so parse(render(f)) == f.
std::string render(const Formula& f);
std::string render(const FormulaSet& s);

// Cantor-style pairing (x + y)(x + y + 1) + 2x. Injective on pairs.
Natural pairing(const Natural& x, const Natural& y);
// Inverse of pairing; absent when n is not a pairing value.
std::optional<std::pair<Natural, Natural>> unpair(const Natural& n);

//   var v      -> pairing(0, v + 1)
//   bot        -> 0
//   a & b      -> pairing(pairing(code a, 1), code b)
//   a | b      -> pairing(pairing(code a, 2), code b)
//   a -> b     -> pairing(pairing(code a, 3), code b)
Natural encode(const Formula& f);
std::optional<Formula> decode(const Natural& n);

FormulaSet subformulas(const Formula& f);
VarSet variables(const Formula& f);
VarSet variables(const FormulaSet& s);

// Every formula over variables p0..p(num_vars-1) and bot with connective
// depth <= max_depth, in generation order (by depth, then connective, then
// operands).
std::vector<Formula> enumerate_formulas(std::size_t num_vars, std::size_t max_depth);

// Right fold with the given seed: [a, b] -> a & (b & seed).
Formula fold_conj(const std::vector<Formula>& items, const Formula& seed);
Formula fold_disj(const std::vector<Formula>& items, const Formula& seed);

}  // namespace iplkit

template <>
struct std::hash<iplkit::Formula> {
  std::size_t operator()(const iplkit::Formula& f) const noexcept { return f.hash(); }
};

#endif  // IPLKIT_FORMULA_HPP
