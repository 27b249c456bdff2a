// Finite Heyting algebras, their filters, and algebraic semantics.

#ifndef IPLKIT_HEYTING_HPP
#define IPLKIT_HEYTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iplkit/formula.hpp"

namespace iplkit {

using Element = std::size_t;
// Bit i is set iff element i is a member.
using ElementSet = std::uint64_t;
constexpr std::size_t kMaxElements = 64;

// Order table as rows: bit b of rows[a] is set iff a <= b.
using OrderRows = std::vector<ElementSet>;
using Table = std::vector<Element>;  // n * n, entry [a * n + b]

class NotALattice : public std::invalid_argument {
 public:
  NotALattice(std::string what, Element a, Element b) : std::invalid_argument(what), a_(a), b_(b) {}
  Element a() const noexcept { return a_; }
  Element b() const noexcept { return b_; }

 private:
  Element a_, b_;
};

// No greatest x with meet(x, b) <= c.
class NotHeyting : public std::invalid_argument {
 public:
  NotHeyting(Element b, Element c)
      : std::invalid_argument("no relative pseudocomplement for (" + std::to_string(b) + ", " + std::to_string(c) + ")"),
        b_(b), c_(c) {}
  Element b() const noexcept { return b_; }
  Element c() const noexcept { return c_; }

 private:
  Element b_, c_;
};

struct Lattice {
  std::size_t size = 0;
  OrderRows le;
  Table meet, join;
  Element bot = 0, top = 0;
};

// Meet and join read off a partial order; throws NotALattice when some pair
// lacks a glb or lub, std::invalid_argument when bot/top are not extremal.
Lattice lattice_from_order(const OrderRows& le, Element bot, Element top);

// himp(b, c) = the greatest a with meet(a, b) <= c. Throws NotHeyting.
Table himp_from_order(const Lattice& l);

class FiniteHeytingAlgebra {
 public:
  // Tables are taken as given; use validate_algebra to check them.
  FiniteHeytingAlgebra(std::string name, Lattice lattice, Table himp);

  // Lattice operations and himp derived from the order.
  static FiniteHeytingAlgebra from_order(std::string name, const OrderRows& le, Element bot, Element top);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return l_.size; }
  bool le(Element a, Element b) const { return (l_.le[a] >> b) & 1U; }
  ElementSet up(Element a) const { return l_.le[a]; }
  Element meet(Element a, Element b) const { return l_.meet[a * l_.size + b]; }
  Element join(Element a, Element b) const { return l_.join[a * l_.size + b]; }
  Element himp(Element a, Element b) const { return himp_[a * l_.size + b]; }
  Element bot() const noexcept { return l_.bot; }
  Element top() const noexcept { return l_.top; }
  ElementSet all() const noexcept { return size() >= 64 ? ~ElementSet{0} : (ElementSet{1} << size()) - 1; }

  const Lattice& lattice() const noexcept { return l_; }
  const Table& himp_table() const noexcept { return himp_; }

 private:
  std::string name_;
  Lattice l_;
  Table himp_;
};

struct AlgebraViolation {
  enum class Kind { NotReflexive, NotAntisymmetric, NotTransitive, BotNotLeast, TopNotGreatest, MeetNotGlb, JoinNotLub, Residuation };
  Kind kind;
  std::vector<Element> witness;  // Residuation: (a, b, c) with a <= b -> c differing from a & b <= c
  friend bool operator==(const AlgebraViolation&, const AlgebraViolation&) = default;
};

std::string describe(const AlgebraViolation& v);
std::vector<AlgebraViolation> validate_algebra(const FiniteHeytingAlgebra& h);

// Catalog building blocks.
FiniteHeytingAlgebra chain_algebra(std::size_t n);  // 0 < 1 < ... < n-1
FiniteHeytingAlgebra product_algebra(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b);  // (i, j) -> i * |b| + j

// Filters. Every family below is sorted by (member count, mask).
bool is_filter(const FiniteHeytingAlgebra& h, ElementSet s);
std::vector<ElementSet> filters(const FiniteHeytingAlgebra& h);
// Least filter containing x. Computed as the intersection of all filters
// containing x and as the up-closure of finite meets of x (empty meet = top);
// throws std::logic_error if the two disagree.
ElementSet generated_filter(const FiniteHeytingAlgebra& h, ElementSet x);
ElementSet generated_filter_by_intersection(const FiniteHeytingAlgebra& h, ElementSet x);
ElementSet generated_filter_by_meets(const FiniteHeytingAlgebra& h, ElementSet x);
bool is_proper(const FiniteHeytingAlgebra& h, ElementSet f);
bool is_prime(const FiniteHeytingAlgebra& h, ElementSet f);
std::vector<ElementSet> prime_filters(const FiniteHeytingAlgebra& h);

// A prime filter containing f and avoiding x: f is extended greedily by each
// element in index order whenever the generated filter still avoids x.
// Throws std::invalid_argument unless f is a filter without x.
ElementSet super_prime_filter(const FiniteHeytingAlgebra& h, ElementSet f, Element x);

class NoWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least z in f (by index) with meet(x, z) <= y. Requires y in the filter
// generated by f and x (std::invalid_argument otherwise); throws NoWitness if
// no z exists.
Element gen_ins_witness(const FiniteHeytingAlgebra& h, ElementSet f, Element x, Element y);

// himp(x, y) not in f implies y not in the filter generated by f and x.
bool himp_not_mem_check(const FiniteHeytingAlgebra& h, ElementSet f, Element x, Element y);

// super_prime_filter(h, {top}, x); requires x != top.
ElementSet prime_filter_avoiding(const FiniteHeytingAlgebra& h, Element x);
ElementSet prime_intersection(const FiniteHeytingAlgebra& h);

// Variable assignment of an algebraic model.
using Assignment = std::map<Var, Element>;

class UnassignedVariable : public std::out_of_range {
 public:
  explicit UnassignedVariable(Var v) : std::out_of_range("unassigned variable p" + std::to_string(v.index)) {}
};

Element interpret(const FiniteHeytingAlgebra& h, const Assignment& a, const Formula& f);
bool true_in_alg_model(const FiniteHeytingAlgebra& h, const Assignment& a, const Formula& f);

// Every assignment of `vars` into h, odometer order with the smallest
// variable most significant.
std::vector<Assignment> assignments(const FiniteHeytingAlgebra& h, const VarSet& vars);

bool valid_in_alg(const FiniteHeytingAlgebra& h, const Formula& f);
// First refuting assignment over variables(f), if any.
std::optional<Assignment> alg_refutation(const FiniteHeytingAlgebra& h, const Formula& f);

struct AlgConsequence {
  bool holds = true;
  std::size_t algebra = 0;  // when !holds
  Assignment assignment;
};

AlgConsequence alg_sem_conseq_over(const std::vector<FiniteHeytingAlgebra>& algebras, const FormulaSet& gamma,
                                   const Formula& phi);

std::string render_elements(ElementSet s);

}  // namespace iplkit

#endif  // IPLKIT_HEYTING_HPP
