#include "iplkit/kripke.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

namespace iplkit {

namespace {

bool has(WorldSet s, std::size_t w) { return (s >> w) & 1U; }
WorldSet single(std::size_t w) { return WorldSet{1} << w; }

}  // namespace

KripkeModel::KripkeModel(std::vector<WorldSet> successors, Valuation valuation)
    : succ_(std::move(successors)), val_(std::move(valuation)) {
  if (succ_.size() > kMaxWorlds) throw std::invalid_argument("KripkeModel: more than 64 worlds");
  const WorldSet mask = all_worlds(succ_.size());
  for (auto row : succ_)
    if (row & ~mask) throw std::invalid_argument("KripkeModel: relation mentions an unknown world");
  for (const auto& [v, s] : val_)
    if (s & ~mask) throw std::invalid_argument("KripkeModel: valuation of p" + std::to_string(v.index) +
                                               " mentions an unknown world");
}

std::vector<WorldSet> preorder_closure(std::vector<WorldSet> rows) {
  for (std::size_t w = 0; w < rows.size(); ++w) rows[w] |= single(w);
  // Warshall over bit rows.
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (auto& row : rows)
      if (has(row, k)) row |= rows[k];
  return rows;
}

KripkeModel KripkeModel::from_edges(std::size_t num_worlds,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    Valuation valuation) {
  if (num_worlds > kMaxWorlds) throw std::invalid_argument("KripkeModel: more than 64 worlds");
  std::vector<WorldSet> rows(num_worlds, 0);
  for (auto [a, b] : edges) {
    if (a >= num_worlds) throw UnknownWorld(a);
    if (b >= num_worlds) throw UnknownWorld(b);
    rows[a] |= single(b);
  }
  return KripkeModel(preorder_closure(std::move(rows)), std::move(valuation));
}

WorldSet KripkeModel::successors(std::size_t w) const {
  if (w >= succ_.size()) throw UnknownWorld(w);
  return succ_[w];
}

bool KripkeModel::related(std::size_t from, std::size_t to) const {
  if (to >= succ_.size()) throw UnknownWorld(to);
  return has(successors(from), to);
}

WorldSet KripkeModel::truth(Var v) const {
  auto it = val_.find(v);
  if (it == val_.end()) throw UnknownVariable(v);
  return it->second;
}

std::string describe(const Violation& v) {
  auto w = [&](std::size_t i) { return "w" + std::to_string(v.witness[i]); };
  switch (v.kind) {
    case Violation::Kind::Reflexivity: return "Reflexivity(" + w(0) + ")";
    case Violation::Kind::Transitivity: return "Transitivity(" + w(0) + "," + w(1) + "," + w(2) + ")";
    case Violation::Kind::Monotonicity:
      return "Monotonicity(p" + std::to_string(v.witness[0]) + "," + w(1) + "," + w(2) + ")";
  }
  return "?";
}

std::vector<Violation> validate_model(const KripkeModel& m) {
  std::vector<Violation> out;
  const std::size_t n = m.num_worlds();
  const auto& r = m.relation_rows();
  for (std::size_t w = 0; w < n; ++w)
    if (!has(r[w], w)) out.push_back({Violation::Kind::Reflexivity, {w}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!has(r[a], b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (has(r[b], c) && !has(r[a], c)) out.push_back({Violation::Kind::Transitivity, {a, b, c}});
    }
  for (const auto& [v, s] : m.valuation())
    for (std::size_t a = 0; a < n; ++a) {
      if (!has(s, a)) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (has(r[a], b) && !has(s, b))
          out.push_back({Violation::Kind::Monotonicity, {static_cast<std::size_t>(v.index), a, b}});
    }
  return out;
}

WorldSet truth_set(const KripkeModel& m, const Formula& f) {
  const std::size_t n = m.num_worlds();
  switch (f.kind()) {
    case Connective::Variable: return m.truth(f.var());
    case Connective::Bottom: return 0;
    case Connective::And: return truth_set(m, f.lhs()) & truth_set(m, f.rhs());
    case Connective::Or: return truth_set(m, f.lhs()) | truth_set(m, f.rhs());
    case Connective::Implies: {
      // Each subformula is evaluated once for all worlds.
      const WorldSet a = truth_set(m, f.lhs());
      const WorldSet b = truth_set(m, f.rhs());
      const WorldSet bad = a & ~b;
      WorldSet out = 0;
      const auto& rows = m.relation_rows();
      for (std::size_t w = 0; w < n; ++w)
        if ((rows[w] & bad) == 0) out |= single(w);
      return out;
    }
  }
  return 0;
}

bool eval(const KripkeModel& m, std::size_t w, const Formula& f) {
  if (w >= m.num_worlds()) throw UnknownWorld(w);
  return has(truth_set(m, f), w);
}

bool valid_in_model(const KripkeModel& m, const Formula& f) {
  return truth_set(m, f) == all_worlds(m.num_worlds());
}

WorldSet forcing_worlds(const KripkeModel& m, const FormulaSet& gamma) {
  WorldSet s = all_worlds(m.num_worlds());
  for (const auto& g : gamma) s &= truth_set(m, g);
  return s;
}

bool forces_set(const KripkeModel& m, std::size_t w, const FormulaSet& gamma) {
  if (w >= m.num_worlds()) throw UnknownWorld(w);
  return has(forcing_worlds(m, gamma), w);
}

ConsequenceResult sem_conseq_over(const std::vector<KripkeModel>& models, const FormulaSet& gamma,
                                  const Formula& phi) {
  for (std::size_t i = 0; i < models.size(); ++i) {
    WorldSet bad = forcing_worlds(models[i], gamma) & ~truth_set(models[i], phi);
    if (bad) return {false, i, static_cast<std::size_t>(std::countr_zero(bad))};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Perm = std::vector<std::size_t>;

std::uint64_t relation_code(const std::vector<WorldSet>& rows) {
  const std::size_t n = rows.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (has(rows[i], j)) code |= std::uint64_t{1} << (i * n + j);
  return code;
}

std::vector<WorldSet> permute_rows(const std::vector<WorldSet>& rows, const Perm& p) {
  std::vector<WorldSet> out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (has(rows[i], j)) out[p[i]] |= single(p[j]);
  return out;
}

WorldSet permute_set(WorldSet s, const Perm& p) {
  WorldSet out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (has(s, i)) out |= single(p[i]);
  return out;
}

bool topologically_sorted(const std::vector<WorldSet>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (has(rows[i], j) && !has(rows[j], i)) return false;
  return true;
}

bool transitive(const std::vector<WorldSet>& rows) {
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b)
      if (has(rows[a], b) && (rows[b] & ~rows[a])) return false;
  return true;
}

// Topologically sorted preorders on n points, in increasing code order.
std::vector<std::vector<WorldSet>> sorted_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<WorldSet>> out;
  std::vector<WorldSet> rows(n);
  for (std::size_t w = 0; w < n; ++w) rows[w] = single(w);
  // Each pair i < j is unrelated, i below j, or both ways.
  auto go = [&](auto& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      if (transitive(rows)) out.push_back(rows);
      return;
    }
    auto [i, j] = pairs[k];
    for (int state = 0; state < 3; ++state) {
      if (state >= 1) rows[i] |= single(j);
      if (state == 2) rows[j] |= single(i);
      self(self, k + 1);
      rows[i] &= ~single(j);
      rows[j] &= ~single(i);
    }
  };
  go(go, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return relation_code(a) < relation_code(b); });
  return out;
}

std::vector<WorldSet> up_sets(const std::vector<WorldSet>& rows) {
  std::vector<WorldSet> out;
  const WorldSet full = all_worlds(rows.size());
  for (WorldSet s = 0;; ++s) {
    bool closed = true;
    for (std::size_t w = 0; w < rows.size() && closed; ++w)
      if (has(s, w) && (rows[w] & ~s)) closed = false;
    if (closed) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

// Models over k anonymous variables: relation rows and one truth set per
// variable.
struct RawModel {
  std::vector<WorldSet> rows;
  std::vector<WorldSet> truth;
};

std::vector<RawModel> enumerate_raw(std::size_t k, std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_models: at least one world is required");
  if (n > 8) throw std::invalid_argument("enumerate_models: at most 8 worlds are supported");
  std::vector<RawModel> out;
  Perm perm(n);
  for (const auto& rows : sorted_preorders(n)) {
    const auto code = relation_code(rows);
    std::vector<Perm> automorphisms;
    bool canonical = true;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto image = permute_rows(rows, perm);
      if (!topologically_sorted(image)) continue;
      auto c = relation_code(image);
      if (c < code) {
        canonical = false;
        break;
      }
      if (c == code) automorphisms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!canonical) continue;

    const auto ups = up_sets(rows);
    std::vector<std::size_t> idx(k, 0);
    std::vector<WorldSet> truth(k);
    while (true) {
      for (std::size_t v = 0; v < k; ++v) truth[v] = ups[idx[v]];
      bool least = true;
      for (const auto& p : automorphisms) {
        std::vector<WorldSet> image(k);
        for (std::size_t v = 0; v < k; ++v) image[v] = permute_set(truth[v], p);
        if (image < truth) {
          least = false;
          break;
        }
      }
      if (least) out.push_back({rows, truth});
      // Odometer with p0 most significant.
      std::size_t v = k;
      while (v > 0 && ++idx[v - 1] == ups.size()) idx[--v] = 0;
      if (v == 0) break;
    }
  }
  return out;
}

const std::vector<RawModel>& cached_raw(std::size_t k, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<RawModel>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(k, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_raw(k, n)).first;
  return it->second;
}

}  // namespace

std::vector<KripkeModel> enumerate_models_over(const VarSet& vars, std::size_t num_worlds) {
  std::vector<KripkeModel> out;
  for (const auto& raw : cached_raw(vars.size(), num_worlds)) {
    Valuation val;
    std::size_t i = 0;
    for (const auto& v : vars) val.emplace(v, raw.truth[i++]);
    out.emplace_back(raw.rows, std::move(val));
  }
  return out;
}

std::vector<KripkeModel> enumerate_models(std::size_t num_vars, std::size_t num_worlds) {
  VarSet vars;
  for (std::size_t i = 0; i < num_vars; ++i) vars.insert(Var{i});
  return enumerate_models_over(vars, num_worlds);
}

std::optional<Countermodel> countermodel_search(const FormulaSet& gamma, const Formula& phi,
                                                std::size_t max_worlds) {
  VarSet vars = variables(gamma);
  for (auto v : variables(phi)) vars.insert(v);
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (const auto& raw : cached_raw(vars.size(), n)) {
      Valuation val;
      std::size_t i = 0;
      for (const auto& v : vars) val.emplace(v, raw.truth[i++]);
      KripkeModel m(raw.rows, std::move(val));
      WorldSet bad = forcing_worlds(m, gamma) & ~truth_set(m, phi);
      if (bad) return Countermodel{std::move(m), static_cast<std::size_t>(std::countr_zero(bad))};
    }
  }
  return std::nullopt;
}

bool check_monotone_eval(const KripkeModel& m, const std::vector<Formula>& family) {
  const auto& rows = m.relation_rows();
  for (const auto& f : family) {
    const WorldSet s = truth_set(m, f);
    for (std::size_t w = 0; w < rows.size(); ++w)
      if (has(s, w) && (rows[w] & ~s)) return false;
  }
  return true;
}

}  // namespace iplkit
