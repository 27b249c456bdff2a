// Brute-force reference implementations used by the tests. They follow the
// textbook definitions directly and share no code with the library beyond
// the data types.

#ifndef IPLKIT_TESTS_ORACLES_HPP
#define IPLKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "iplkit/heyting.hpp"
#include "iplkit/kripke.hpp"

namespace oracle {

using namespace iplkit;

// Forcing by the recursive clauses.
inline bool force(const KripkeModel& m, std::size_t w, const Formula& f) {
  switch (f.kind()) {
    case Connective::Variable:
      return (m.truth(f.var()) >> w) & 1U;
    case Connective::Bottom:
      return false;
    case Connective::And:
      return force(m, w, f.lhs()) && force(m, w, f.rhs());
    case Connective::Or:
      return force(m, w, f.lhs()) || force(m, w, f.rhs());
    case Connective::Implies:
      for (std::size_t v = 0; v < m.num_worlds(); ++v)
        if (m.related(w, v) && force(m, v, f.lhs()) && !force(m, v, f.rhs())) return false;
      return true;
  }
  return false;
}

inline bool valid(const KripkeModel& m, const Formula& f) {
  for (std::size_t w = 0; w < m.num_worlds(); ++w)
    if (!force(m, w, f)) return false;
  return true;
}

// Classical truth value; bit i of row is the value of p_i.
inline bool truth_table(const Formula& f, unsigned row) {
  switch (f.kind()) {
    case Connective::Variable:
      return (row >> f.var().index) & 1U;
    case Connective::Bottom:
      return false;
    case Connective::And:
      return truth_table(f.lhs(), row) && truth_table(f.rhs(), row);
    case Connective::Or:
      return truth_table(f.lhs(), row) || truth_table(f.rhs(), row);
    case Connective::Implies:
      return !truth_table(f.lhs(), row) || truth_table(f.rhs(), row);
  }
  return false;
}

inline bool tautology(const Formula& f, unsigned num_vars) {
  for (unsigned row = 0; row < (1U << num_vars); ++row)
    if (!truth_table(f, row)) return false;
  return true;
}

// Every reflexive transitive relation on n points, as rows.
inline std::vector<std::vector<WorldSet>> all_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::vector<std::vector<WorldSet>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    std::vector<WorldSet> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = WorldSet{1} << i;
    for (std::size_t b = 0; b < off.size(); ++b)
      if ((mask >> b) & 1U) rows[off[b].first] |= WorldSet{1} << off[b].second;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if ((rows[i] >> j) & 1U)
          for (std::size_t k = 0; k < n; ++k)
            if (((rows[j] >> k) & 1U) && !((rows[i] >> k) & 1U)) transitive = false;
    if (transitive) out.push_back(rows);
  }
  return out;
}

// Every model on n worlds over p0..p(k-1), with no symmetry reduction.
inline std::vector<KripkeModel> all_models(std::size_t k, std::size_t n) {
  std::vector<KripkeModel> out;
  for (const auto& rows : all_preorders(n)) {
    std::vector<WorldSet> ups;
    for (WorldSet s = 0; s < (WorldSet{1} << n); ++s) {
      bool up = true;
      for (std::size_t i = 0; i < n; ++i)
        if (((s >> i) & 1U) && (rows[i] & ~s)) up = false;
      if (up) ups.push_back(s);
    }
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      Valuation val;
      for (std::size_t v = 0; v < k; ++v) val[Var{static_cast<std::uint32_t>(v)}] = ups[pick[v]];
      out.emplace_back(rows, val);
      std::size_t v = 0;
      while (v < k && ++pick[v] == ups.size()) pick[v++] = 0;
      if (v == k) break;
    }
  }
  return out;
}

// Least key over all world permutations: relation bits, then truth sets.
inline std::vector<std::uint64_t> iso_key(const KripkeModel& m) {
  const std::size_t n = m.num_worlds();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> key;
    std::uint64_t rel = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m.related(i, j)) rel |= std::uint64_t{1} << (p[i] * n + p[j]);
    key.push_back(rel);
    for (const auto& [v, s] : m.valuation()) {
      std::uint64_t t = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((s >> i) & 1U) t |= std::uint64_t{1} << p[i];
      key.push_back(t);
    }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Filter and primality straight from the definitions over the tables.
inline bool is_filter(const FiniteHeytingAlgebra& h, ElementSet s) {
  if (s == 0) return false;
  for (Element a = 0; a < h.size(); ++a) {
    if (!((s >> a) & 1U)) continue;
    for (Element b = 0; b < h.size(); ++b) {
      if (h.le(a, b) && !((s >> b) & 1U)) return false;
      if (((s >> b) & 1U) && !((s >> h.meet(a, b)) & 1U)) return false;
    }
  }
  return true;
}

inline bool is_prime(const FiniteHeytingAlgebra& h, ElementSet s) {
  if (!oracle::is_filter(h, s) || ((s >> h.bot()) & 1U)) return false;
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      if (((s >> h.join(a, b)) & 1U) && !((s >> a) & 1U) && !((s >> b) & 1U)) return false;
  return true;
}

inline std::vector<ElementSet> all_filters(const FiniteHeytingAlgebra& h) {
  std::vector<ElementSet> out;
  for (ElementSet s = 1; s < (ElementSet{1} << h.size()); ++s)
    if (oracle::is_filter(h, s)) out.push_back(s);
  return out;
}

// Least filter containing x: intersection of every filter that contains it.
inline ElementSet least_filter(const FiniteHeytingAlgebra& h, ElementSet x) {
  ElementSet out = h.all();
  for (auto f : all_filters(h))
    if ((x & ~f) == 0) out &= f;
  return out;
}

}  // namespace oracle

#endif  // IPLKIT_TESTS_ORACLES_HPP
