#include "iplkit/heyting.hpp"

#include <algorithm>
#include <bit>

namespace iplkit {

namespace {

bool has(ElementSet s, Element e) { return (s >> e) & 1U; }
ElementSet single(Element e) { return ElementSet{1} << e; }

OrderRows down_sets(const OrderRows& le) {
  OrderRows down(le.size(), 0);
  for (Element a = 0; a < le.size(); ++a)
    for (Element b = 0; b < le.size(); ++b)
      if (has(le[a], b)) down[b] |= single(a);
  return down;
}

// The member of s above every member of s, if any.
std::optional<Element> greatest(const OrderRows& down, ElementSet s) {
  for (Element g = 0; g < down.size(); ++g)
    if (has(s, g) && (s & ~down[g]) == 0) return g;
  return std::nullopt;
}

void sort_family(std::vector<ElementSet>& v) {
  std::sort(v.begin(), v.end(), [](ElementSet a, ElementSet b) {
    auto ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
}

}  // namespace

Lattice lattice_from_order(const OrderRows& le, Element bot, Element top) {
  const std::size_t n = le.size();
  if (n == 0 || n > kMaxElements) throw std::invalid_argument("lattice: size must be in 1..64");
  if (bot >= n || top >= n) throw std::invalid_argument("lattice: bot/top out of range");
  Lattice l;
  l.size = n;
  l.le = le;
  l.bot = bot;
  l.top = top;
  const ElementSet all = n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
  if (le[bot] != all) throw std::invalid_argument("lattice: bot is not least");
  const auto down = down_sets(le);
  if (down[top] != all) throw std::invalid_argument("lattice: top is not greatest");
  // Upper bounds of a and b are le[a] & le[b]; the lub is their least member.
  l.meet.resize(n * n);
  l.join.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto g = greatest(down, down[a] & down[b]);
      if (!g) throw NotALattice("no meet for (" + std::to_string(a) + ", " + std::to_string(b) + ")", a, b);
      l.meet[a * n + b] = *g;
      std::optional<Element> lub;
      const ElementSet ub = le[a] & le[b];
      for (Element c = 0; c < n && !lub; ++c)
        if (has(ub, c) && (ub & ~le[c]) == 0) lub = c;
      if (!lub) throw NotALattice("no join for (" + std::to_string(a) + ", " + std::to_string(b) + ")", a, b);
      l.join[a * n + b] = *lub;
    }
  return l;
}

Table himp_from_order(const Lattice& l) {
  const std::size_t n = l.size;
  const auto down = down_sets(l.le);
  Table t(n * n);
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c) {
      ElementSet s = 0;
      for (Element a = 0; a < n; ++a)
        if (has(l.le[l.meet[a * n + b]], c)) s |= single(a);
      auto g = greatest(down, s);
      if (!g) throw NotHeyting(b, c);
      t[b * n + c] = *g;
    }
  return t;
}

FiniteHeytingAlgebra::FiniteHeytingAlgebra(std::string name, Lattice lattice, Table himp)
    : name_(std::move(name)), l_(std::move(lattice)), himp_(std::move(himp)) {
  const std::size_t n = l_.size;
  if (n == 0 || n > kMaxElements) throw std::invalid_argument("algebra: size must be in 1..64");
  if (l_.le.size() != n || l_.meet.size() != n * n || l_.join.size() != n * n || himp_.size() != n * n)
    throw std::invalid_argument("algebra: malformed tables");
  for (const auto* t : {&l_.meet, &l_.join, &himp_})
    for (auto e : *t)
      if (e >= n) throw std::invalid_argument("algebra: table entry out of range");
  if (l_.bot >= n || l_.top >= n) throw std::invalid_argument("algebra: bot/top out of range");
  const ElementSet all = this->all();
  for (auto row : l_.le)
    if (row & ~all) throw std::invalid_argument("algebra: order row out of range");
}

FiniteHeytingAlgebra FiniteHeytingAlgebra::from_order(std::string name, const OrderRows& le, Element bot,
                                                      Element top) {
  auto l = lattice_from_order(le, bot, top);
  auto h = himp_from_order(l);
  return FiniteHeytingAlgebra(std::move(name), std::move(l), std::move(h));
}

std::string describe(const AlgebraViolation& v) {
  static const char* names[] = {"NotReflexive", "NotAntisymmetric", "NotTransitive", "BotNotLeast",
                                "TopNotGreatest", "MeetNotGlb", "JoinNotLub", "Residuation"};
  std::string out = names[static_cast<int>(v.kind)];
  out += "(";
  for (std::size_t i = 0; i < v.witness.size(); ++i) out += (i ? "," : "") + std::to_string(v.witness[i]);
  return out + ")";
}

std::vector<AlgebraViolation> validate_algebra(const FiniteHeytingAlgebra& h) {
  using K = AlgebraViolation::Kind;
  std::vector<AlgebraViolation> out;
  const std::size_t n = h.size();
  for (Element a = 0; a < n; ++a) {
    if (!h.le(a, a)) out.push_back({K::NotReflexive, {a}});
    if (!h.le(h.bot(), a)) out.push_back({K::BotNotLeast, {a}});
    if (!h.le(a, h.top())) out.push_back({K::TopNotGreatest, {a}});
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (a != b && h.le(a, b) && h.le(b, a)) out.push_back({K::NotAntisymmetric, {a, b}});
      for (Element c = 0; c < n; ++c)
        if (h.le(a, b) && h.le(b, c) && !h.le(a, c)) out.push_back({K::NotTransitive, {a, b, c}});
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element m = h.meet(a, b), j = h.join(a, b);
      bool glb = h.le(m, a) && h.le(m, b);
      bool lub = h.le(a, j) && h.le(b, j);
      for (Element c = 0; c < n; ++c) {
        if (h.le(c, a) && h.le(c, b) && !h.le(c, m)) glb = false;
        if (h.le(a, c) && h.le(b, c) && !h.le(j, c)) lub = false;
      }
      if (!glb) out.push_back({K::MeetNotGlb, {a, b}});
      if (!lub) out.push_back({K::JoinNotLub, {a, b}});
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (h.le(a, h.himp(b, c)) != h.le(h.meet(a, b), c)) out.push_back({K::Residuation, {a, b, c}});
  return out;
}

FiniteHeytingAlgebra chain_algebra(std::size_t n) {
  if (n == 0 || n > kMaxElements) throw std::invalid_argument("chain_algebra: size must be in 1..64");
  OrderRows le(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) le[a] |= single(b);
  return FiniteHeytingAlgebra::from_order("C" + std::to_string(n), le, 0, n - 1);
}

FiniteHeytingAlgebra product_algebra(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > kMaxElements) throw std::invalid_argument("product_algebra: more than 64 elements");
  Lattice l;
  l.size = n;
  l.le.assign(n, 0);
  l.meet.resize(n * n);
  l.join.resize(n * n);
  Table himp(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      if (a.le(xa, ya) && b.le(xb, yb)) l.le[x] |= single(y);
      l.meet[x * n + y] = a.meet(xa, ya) * nb + b.meet(xb, yb);
      l.join[x * n + y] = a.join(xa, ya) * nb + b.join(xb, yb);
      himp[x * n + y] = a.himp(xa, ya) * nb + b.himp(xb, yb);
    }
  l.bot = a.bot() * nb + b.bot();
  l.top = a.top() * nb + b.top();
  return FiniteHeytingAlgebra(a.name() + "x" + b.name(), std::move(l), std::move(himp));
}

// ---------------------------------------------------------------------------

bool is_filter(const FiniteHeytingAlgebra& h, ElementSet s) {
  if (s == 0 || (s & ~h.all())) return false;
  for (Element a = 0; a < h.size(); ++a) {
    if (!has(s, a)) continue;
    if (h.up(a) & ~s) return false;
    for (Element b = 0; b < h.size(); ++b)
      if (has(s, b) && !has(s, h.meet(a, b))) return false;
  }
  return true;
}

std::vector<ElementSet> filters(const FiniteHeytingAlgebra& h) {
  // In a finite lattice a filter is the up-set of the meet of its members.
  std::vector<ElementSet> out;
  for (Element a = 0; a < h.size(); ++a) out.push_back(h.up(a));
  sort_family(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet generated_filter_by_intersection(const FiniteHeytingAlgebra& h, ElementSet x) {
  ElementSet out = h.all();
  for (auto f : filters(h))
    if ((x & ~f) == 0) out &= f;
  return out;
}

ElementSet generated_filter_by_meets(const FiniteHeytingAlgebra& h, ElementSet x) {
  ElementSet meets = single(h.top());
  for (ElementSet prev = 0; prev != meets;) {
    prev = meets;
    for (Element m = 0; m < h.size(); ++m) {
      if (!has(prev, m)) continue;
      for (Element e = 0; e < h.size(); ++e)
        if (has(x, e)) meets |= single(h.meet(m, e));
    }
  }
  ElementSet out = 0;
  for (Element m = 0; m < h.size(); ++m)
    if (has(meets, m)) out |= h.up(m);
  return out;
}

ElementSet generated_filter(const FiniteHeytingAlgebra& h, ElementSet x) {
  if (x & ~h.all()) throw std::invalid_argument("generated_filter: element out of range");
  const ElementSet a = generated_filter_by_intersection(h, x);
  const ElementSet b = generated_filter_by_meets(h, x);
  if (a != b) throw std::logic_error("generated_filter: the two characterizations disagree on " + render_elements(x));
  return a;
}

bool is_proper(const FiniteHeytingAlgebra& h, ElementSet f) { return !has(f, h.bot()); }

bool is_prime(const FiniteHeytingAlgebra& h, ElementSet f) {
  if (!is_proper(h, f)) return false;
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      if (has(f, h.join(a, b)) && !has(f, a) && !has(f, b)) return false;
  return true;
}

std::vector<ElementSet> prime_filters(const FiniteHeytingAlgebra& h) {
  std::vector<ElementSet> out;
  for (auto f : filters(h))
    if (is_prime(h, f)) out.push_back(f);
  return out;
}

ElementSet super_prime_filter(const FiniteHeytingAlgebra& h, ElementSet f, Element x) {
  if (x >= h.size()) throw std::invalid_argument("super_prime_filter: element out of range");
  if (!is_filter(h, f)) throw std::invalid_argument("super_prime_filter: " + render_elements(f) + " is not a filter");
  if (has(f, x)) throw std::invalid_argument("super_prime_filter: the filter contains the element to avoid");
  ElementSet g = f;
  for (Element e = 0; e < h.size(); ++e) {
    if (has(g, e)) continue;
    ElementSet bigger = generated_filter(h, g | single(e));
    if (!has(bigger, x)) g = bigger;
  }
  if (is_prime(h, g)) return g;
  // A maximal filter avoiding x is prime in any distributive lattice; keep a
  // search for the record anyway.
  for (auto p : prime_filters(h))
    if ((f & ~p) == 0 && !has(p, x)) return p;
  throw std::logic_error("super_prime_filter: no prime filter extends " + render_elements(f));
}

Element gen_ins_witness(const FiniteHeytingAlgebra& h, ElementSet f, Element x, Element y) {
  if (x >= h.size() || y >= h.size()) throw std::invalid_argument("gen_ins_witness: element out of range");
  if (!has(generated_filter(h, f | single(x)), y))
    throw std::invalid_argument("gen_ins_witness: y is not in the generated filter");
  for (Element z = 0; z < h.size(); ++z)
    if (has(f, z) && h.le(h.meet(x, z), y)) return z;
  throw NoWitness("gen_ins_witness: no z in " + render_elements(f) + " with x & z <= y");
}

bool himp_not_mem_check(const FiniteHeytingAlgebra& h, ElementSet f, Element x, Element y) {
  if (has(f, h.himp(x, y))) return true;
  return !has(generated_filter(h, f | single(x)), y);
}

ElementSet prime_filter_avoiding(const FiniteHeytingAlgebra& h, Element x) {
  if (x == h.top()) throw std::invalid_argument("prime_filter_avoiding: every filter contains top");
  return super_prime_filter(h, single(h.top()), x);
}

ElementSet prime_intersection(const FiniteHeytingAlgebra& h) {
  ElementSet out = h.all();
  for (auto p : prime_filters(h)) out &= p;
  return out;
}

// ---------------------------------------------------------------------------

Element interpret(const FiniteHeytingAlgebra& h, const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Connective::Variable: {
      auto it = a.find(f.var());
      if (it == a.end()) throw UnassignedVariable(f.var());
      if (it->second >= h.size()) throw std::invalid_argument("interpret: element out of range");
      return it->second;
    }
    case Connective::Bottom: return h.bot();
    case Connective::And: return h.meet(interpret(h, a, f.lhs()), interpret(h, a, f.rhs()));
    case Connective::Or: return h.join(interpret(h, a, f.lhs()), interpret(h, a, f.rhs()));
    case Connective::Implies: return h.himp(interpret(h, a, f.lhs()), interpret(h, a, f.rhs()));
  }
  return h.bot();
}

bool true_in_alg_model(const FiniteHeytingAlgebra& h, const Assignment& a, const Formula& f) {
  return interpret(h, a, f) == h.top();
}

std::vector<Assignment> assignments(const FiniteHeytingAlgebra& h, const VarSet& vars) {
  std::vector<Var> vs(vars.begin(), vars.end());
  std::vector<Element> idx(vs.size(), 0);
  std::vector<Assignment> out;
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < vs.size(); ++i) a.emplace(vs[i], idx[i]);
    out.push_back(std::move(a));
    std::size_t i = vs.size();
    while (i > 0 && ++idx[i - 1] == h.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::optional<Assignment> alg_refutation(const FiniteHeytingAlgebra& h, const Formula& f) {
  for (auto& a : assignments(h, variables(f)))
    if (!true_in_alg_model(h, a, f)) return a;
  return std::nullopt;
}

bool valid_in_alg(const FiniteHeytingAlgebra& h, const Formula& f) { return !alg_refutation(h, f); }

AlgConsequence alg_sem_conseq_over(const std::vector<FiniteHeytingAlgebra>& algebras, const FormulaSet& gamma,
                                   const Formula& phi) {
  VarSet vars = variables(gamma);
  for (auto v : variables(phi)) vars.insert(v);
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const auto& h = algebras[i];
    for (auto& a : assignments(h, vars)) {
      bool premises = std::all_of(gamma.begin(), gamma.end(), [&](const Formula& g) { return true_in_alg_model(h, a, g); });
      if (premises && !true_in_alg_model(h, a, phi)) return {false, i, std::move(a)};
    }
  }
  return {};
}

std::string render_elements(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e = 0; e < 64; ++e)
    if (has(s, e)) {
      out += (first ? "" : ",") + std::to_string(e);
      first = false;
    }
  return out + "}";
}

}  // namespace iplkit
