#include "iplkit/bridge.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace iplkit {

namespace {

bool has(std::uint64_t s, std::size_t i) { return (s >> i) & 1U; }

}  // namespace

std::vector<WorldSet> closed_sets(const KripkeModel& m) {
  const std::size_t n = m.num_worlds();
  if (n > 20) throw std::invalid_argument("closed_sets: too many worlds to enumerate subsets");
  const auto& rows = m.relation_rows();
  std::vector<WorldSet> out;
  for (WorldSet s = 0; s <= all_worlds(n); ++s) {
    bool closed = true;
    for (std::size_t w = 0; w < n && closed; ++w)
      if (has(s, w) && (rows[w] & ~s)) closed = false;
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](WorldSet a, WorldSet b) {
    auto ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

Element ClosedSetAlgebra::element_of(WorldSet s) const {
  auto it = std::find(carrier.begin(), carrier.end(), s);
  if (it == carrier.end()) throw std::invalid_argument("closed_set_algebra: world set is not closed");
  return static_cast<Element>(it - carrier.begin());
}

ClosedSetAlgebra closed_set_algebra(const KripkeModel& m, std::string name) {
  auto carrier = closed_sets(m);
  const std::size_t n = carrier.size();
  if (n > kMaxElements) throw std::invalid_argument("closed_set_algebra: more than 64 closed sets");
  auto index = [&](WorldSet s) {
    return static_cast<Element>(std::find(carrier.begin(), carrier.end(), s) - carrier.begin());
  };
  const WorldSet all = all_worlds(m.num_worlds());
  Lattice l;
  l.size = n;
  l.le.assign(n, 0);
  l.meet.resize(n * n);
  l.join.resize(n * n);
  Table himp(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const WorldSet x = carrier[a], y = carrier[b];
      if ((x & ~y) == 0) l.le[a] |= ElementSet{1} << b;
      l.meet[a * n + b] = index(x & y);
      l.join[a * n + b] = index(x | y);
      const WorldSet bound = (all & ~x) | y;
      WorldSet u = 0;
      for (auto c : carrier)
        if ((c & ~bound) == 0) u |= c;
      himp[a * n + b] = index(u);
    }
  l.bot = index(0);
  l.top = index(all);
  return ClosedSetAlgebra{carrier, FiniteHeytingAlgebra(std::move(name), std::move(l), std::move(himp))};
}

Assignment closed_assignment(const ClosedSetAlgebra& a, const KripkeModel& m) {
  Assignment out;
  for (const auto& [v, s] : m.valuation()) out.emplace(v, a.element_of(s));
  return out;
}

bool kripke_to_alg_check(const KripkeModel& m, const Formula& f) { return kripke_to_alg_check(m, closed_set_algebra(m), f); }

bool kripke_to_alg_check(const KripkeModel& m, const ClosedSetAlgebra& a, const Formula& f) {
  const WorldSet h = h_closed(m, f);
  const bool valid = valid_in_model(m, f);
  if (valid != (h == all_worlds(m.num_worlds()))) return false;
  const Element e = interpret(a.algebra, closed_assignment(a, m), f);
  return a.carrier[e] == h && valid == (e == a.algebra.top());
}

PrimeFilterFrame prime_filter_frame(const FiniteHeytingAlgebra& h, const Assignment& i) {
  auto worlds = prime_filters(h);
  if (worlds.size() > kMaxWorlds) throw std::invalid_argument("prime_filter_frame: more than 64 prime filters");
  std::vector<WorldSet> rows(worlds.size(), 0);
  for (std::size_t a = 0; a < worlds.size(); ++a)
    for (std::size_t b = 0; b < worlds.size(); ++b)
      if ((worlds[a] & ~worlds[b]) == 0) rows[a] |= WorldSet{1} << b;
  Valuation val;
  for (const auto& [v, e] : i) {
    if (e >= h.size()) throw std::invalid_argument("prime_filter_frame: element out of range");
    WorldSet s = 0;
    for (std::size_t w = 0; w < worlds.size(); ++w)
      if (has(worlds[w], e)) s |= WorldSet{1} << w;
    val.emplace(v, s);
  }
  return PrimeFilterFrame{worlds, KripkeModel(std::move(rows), std::move(val))};
}

bool alg_to_kripke_check(const FiniteHeytingAlgebra& h, const Assignment& i, const Formula& f) {
  return alg_to_kripke_check(h, prime_filter_frame(h, i), i, f);
}

bool alg_to_kripke_check(const FiniteHeytingAlgebra& h, const PrimeFilterFrame& frame, const Assignment& i,
                         const Formula& f) {
  const Element e = interpret(h, i, f);
  const WorldSet t = truth_set(frame.model, f);
  for (std::size_t w = 0; w < frame.worlds.size(); ++w)
    if (has(t, w) != has(frame.worlds[w], e)) return false;
  return (e == h.top()) == valid_in_model(frame.model, f);
}

std::optional<std::vector<Element>> algebra_isomorphism(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        ok = a.le(x, y) == b.le(p[x], p[y]) && p[a.meet(x, y)] == b.meet(p[x], p[y]) &&
             p[a.join(x, y)] == b.join(p[x], p[y]) && p[a.himp(x, y)] == b.himp(p[x], p[y]);
    if (ok && p[a.bot()] == b.bot() && p[a.top()] == b.top()) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> model_isomorphism(const KripkeModel& a, const KripkeModel& b) {
  const std::size_t n = a.num_worlds();
  if (b.num_worlds() != n || a.valuation().size() != b.valuation().size()) return std::nullopt;
  for (const auto& [v, s] : a.valuation())
    if (!b.declares(v)) return std::nullopt;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = a.related(x, y) == b.related(p[x], p[y]);
    for (const auto& [v, s] : a.valuation()) {
      if (!ok) break;
      const WorldSet t = b.truth(v);
      for (std::size_t x = 0; x < n && ok; ++x) ok = has(s, x) == has(t, p[x]);
    }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

namespace {

std::string poset_name(const KripkeModel& m) {
  std::string edges;
  for (std::size_t i = 0; i < m.num_worlds(); ++i)
    for (std::size_t j = 0; j < m.num_worlds(); ++j)
      if (i != j && m.related(i, j)) edges += (edges.empty() ? "" : ",") + std::to_string(i) + "<" + std::to_string(j);
  return "closed(" + std::to_string(m.num_worlds()) + (edges.empty() ? "" : ":" + edges) + ")";
}

std::vector<FiniteHeytingAlgebra> make_catalog() {
  std::vector<FiniteHeytingAlgebra> out;
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(chain_algebra(n));
  out.push_back(product_algebra(chain_algebra(2), chain_algebra(2)));
  out.push_back(product_algebra(chain_algebra(3), chain_algebra(2)));
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& m : enumerate_models(0, n)) {
      bool antisymmetric = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && m.related(i, j) && m.related(j, i)) antisymmetric = false;
      if (antisymmetric) out.push_back(closed_set_algebra(m, poset_name(m)).algebra);
    }
  return out;
}

}  // namespace

const std::vector<FiniteHeytingAlgebra>& algebra_catalog() {
  static const std::vector<FiniteHeytingAlgebra> catalog = make_catalog();
  return catalog;
}

std::vector<HarnessEntry> validity_equiv_harness(const std::vector<Formula>& formulas,
                                                 const std::vector<KripkeModel>& models,
                                                 const std::vector<FiniteHeytingAlgebra>& algebras) {
  std::vector<HarnessEntry> out;
  std::vector<ClosedSetAlgebra> bridged;
  for (const auto& m : models) bridged.push_back(closed_set_algebra(m));
  for (const auto& f : formulas) {
    HarnessEntry e{f, true, true, {}};
    for (std::size_t i = 0; i < models.size(); ++i) {
      if (valid_in_model(models[i], f)) continue;
      e.kripke_valid = false;
      if (true_in_alg_model(bridged[i].algebra, closed_assignment(bridged[i], models[i]), f))
        e.discrepancies.push_back("model " + std::to_string(i) + " refutes it but its closed-set algebra does not");
    }
    for (std::size_t i = 0; i < algebras.size(); ++i) {
      auto a = alg_refutation(algebras[i], f);
      if (!a) continue;
      e.algebra_valid = false;
      if (valid_in_model(prime_filter_frame(algebras[i], *a).model, f))
        e.discrepancies.push_back("algebra " + algebras[i].name() + " refutes it but its prime-filter frame does not");
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace iplkit
