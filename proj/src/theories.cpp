#include "iplkit/theories.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace iplkit {

namespace {

std::vector<Formula> by_code(const FormulaSet& s) {
  std::vector<std::pair<Natural, Formula>> keyed;
  for (const auto& f : s) keyed.emplace_back(encode(f), f);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Formula> out;
  for (auto& [c, f] : keyed) out.push_back(std::move(f));
  return out;
}

}  // namespace

FormulaUniverse::FormulaUniverse(std::vector<Formula> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (!index_.emplace(items_[i], i).second)
      throw std::invalid_argument("FormulaUniverse: duplicate formula " + render(items_[i]));
}

FormulaUniverse FormulaUniverse::canonical(std::size_t num_vars, std::size_t max_depth) {
  auto all = enumerate_formulas(num_vars, max_depth);
  FormulaSet s(all.begin(), all.end());
  return FormulaUniverse(by_code(s));
}

std::optional<std::size_t> FormulaUniverse::code(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

OracleBudget OracleBudget::parse(const std::string& text) {
  OracleBudget b;
  std::stringstream in(text);
  std::string part;
  std::size_t field = 0;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789 ") != std::string::npos)
      throw std::invalid_argument("budget: expected worlds[,steps], got '" + text + "'");
    auto value = std::stoull(part);
    if (field == 0) b.max_worlds = value;
    else if (field == 1) b.max_steps = value;
    else throw std::invalid_argument("budget: too many fields in '" + text + "'");
    ++field;
  }
  if (b.max_worlds == 0 || b.max_worlds > 8) throw std::invalid_argument("budget: worlds must be in 1..8");
  return b;
}

OracleBudget OracleBudget::from_env() {
  const char* env = std::getenv("IPLKIT_BUDGET");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

std::string OracleBudget::describe() const {
  return std::to_string(max_worlds) + " worlds, " + std::to_string(max_steps) + " search steps";
}

std::string_view kind_name(ProvabilityVerdict::Kind k) {
  switch (k) {
    case ProvabilityVerdict::Kind::Provable: return "Provable";
    case ProvabilityVerdict::Kind::Refuted: return "Refuted";
    case ProvabilityVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::Holds: return "Holds";
    case Truth::Fails: return "Fails";
    case Truth::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::optional<Derivation> shortcut(const FormulaSet& gamma, const Formula& phi) {
  if (gamma.contains(phi)) return derive::premise(phi);
  if (gamma.contains(Formula::bottom())) return derive::ex_falso(derive::premise(Formula::bottom()), phi);
  if (phi == Formula::top()) return derive::top_intro();
  if (phi.is(Connective::Implies) && phi.lhs() == phi.rhs()) return derive::identity(phi.lhs());
  if (phi.is_bottom())
    for (const auto& g : gamma)
      if (g.is(Connective::Implies) && g.rhs().is_bottom() && gamma.contains(g.lhs()))
        return derive::neg_elim(derive::premise(g.lhs()), derive::premise(g));
  return std::nullopt;
}

}  // namespace

ProvabilityVerdict Oracle::decide(const FormulaSet& gamma, const Formula& phi) const {
  ProvabilityVerdict v;
  auto provable_with = [&](ProofTerm p) {
    if (check(gamma, p) != phi) throw std::logic_error("oracle: proof witness does not check");
    v.kind = ProvabilityVerdict::Kind::Provable;
    v.witness = std::move(p);
    return v;
  };
  if (auto d = shortcut(gamma, phi)) return provable_with(d->term);

  auto search = search_proof(gamma, phi, ProverLimits{budget_.max_steps});
  if (search.outcome == SearchOutcome::Proved) return provable_with(*search.proof);

  if (auto cm = countermodel_search(gamma, phi, budget_.max_worlds)) {
    if (!validate_model(cm->model).empty() || !forces_set(cm->model, cm->world, gamma) ||
        eval(cm->model, cm->world, phi))
      throw std::logic_error("oracle: countermodel does not re-evaluate");
    v.kind = ProvabilityVerdict::Kind::Refuted;
    v.countermodel = std::move(cm);
    return v;
  }
  v.note = search.outcome == SearchOutcome::NotProvable
               ? "proof search failed but no countermodel within " + std::to_string(budget_.max_worlds) + " worlds"
               : "budget exhausted (" + budget_.describe() + ")";
  return v;
}

ProvabilityVerdict Oracle::provable(const FormulaSet& gamma, const Formula& phi) const {
  auto key = std::make_pair(gamma, phi);
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto v = decide(gamma, phi);
  std::lock_guard lock(mu_);
  return cache_.emplace(std::move(key), std::move(v)).first->second;
}

ProvabilityVerdict oracle_provable(const FormulaSet& gamma, const Formula& phi, const OracleBudget& budget) {
  return Oracle(budget).provable(gamma, phi);
}

// ---------------------------------------------------------------------------

TheoryVerdict is_ded_closed(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle) {
  TheoryVerdict out;
  bool unknown = false;
  for (const auto& phi : u.items()) {
    if (gamma.contains(phi)) continue;
    auto v = oracle.provable(gamma, phi);
    if (v.provable()) {
      out.truth = Truth::Fails;
      out.witness = {phi};
      out.proof = v.witness;
      return out;
    }
    if (v.refuted()) out.refutations.push_back(*v.countermodel);
    else unknown = true;
  }
  out.truth = unknown ? Truth::Unknown : Truth::Holds;
  return out;
}

TheoryVerdict is_consistent(const FormulaSet& gamma, const Oracle& oracle) {
  TheoryVerdict out;
  auto v = oracle.provable(gamma, Formula::bottom());
  if (v.provable()) {
    out.truth = Truth::Fails;
    out.proof = v.witness;
  } else if (v.refuted()) {
    out.truth = Truth::Holds;
    out.refutations.push_back(*v.countermodel);
  }
  return out;
}

TheoryVerdict is_disjunctive(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle) {
  TheoryVerdict out;
  bool unknown = false;
  for (const auto& f : u.items()) {
    if (!f.is(Connective::Or)) continue;
    auto whole = oracle.provable(gamma, f);
    if (whole.refuted()) continue;
    if (whole.unknown()) {
      unknown = true;
      continue;
    }
    auto l = oracle.provable(gamma, f.lhs());
    auto r = oracle.provable(gamma, f.rhs());
    if (l.provable() || r.provable()) continue;
    if (l.refuted() && r.refuted()) {
      out.truth = Truth::Fails;
      out.witness = {f.lhs(), f.rhs()};
      out.proof = whole.witness;
      out.refutations = {*l.countermodel, *r.countermodel};
      return out;
    }
    unknown = true;
  }
  out.truth = unknown ? Truth::Unknown : Truth::Holds;
  return out;
}

// ---------------------------------------------------------------------------

Formula pair_implication(const FormulaSet& phi, const FormulaSet& omega) {
  return Formula::implies(fold_conj(by_code(phi), Formula::top()), fold_disj(by_code(omega), Formula::bottom()));
}

namespace {

// Truth sets of each formula in each small model, to skip subset pairs that
// a model already refutes before asking the oracle.
struct SemanticFilter {
  std::vector<KripkeModel> models;
  std::vector<std::vector<WorldSet>> truth;  // [formula][model]

  SemanticFilter(const std::vector<Formula>& items, std::size_t max_worlds) {
    VarSet vars;
    for (const auto& f : items)
      for (auto v : variables(f)) vars.insert(v);
    for (std::size_t n = 1; n <= max_worlds; ++n)
      for (auto& m : enumerate_models_over(vars, n)) models.push_back(std::move(m));
    for (const auto& f : items) {
      std::vector<WorldSet> row;
      for (const auto& m : models) row.push_back(truth_set(m, f));
      truth.push_back(std::move(row));
    }
  }

  bool refutes(const std::vector<std::size_t>& left, const std::vector<std::size_t>& right) const {
    for (std::size_t m = 0; m < models.size(); ++m) {
      WorldSet s = all_worlds(models[m].num_worlds());
      for (auto i : left) s &= truth[i][m];
      for (auto i : right) s &= ~truth[i][m];
      if (s) return true;
    }
    return false;
  }
};

// Index subsets of {0..n-1} with k elements, in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace

PairVerdict pair_consistent(const FormulaPair& pair, const Oracle& oracle) {
  PairVerdict out;
  const auto left = by_code(pair.left);
  const auto right = by_code(pair.right);
  const std::size_t max_worlds = oracle.budget().max_worlds;

  if (auto cm = countermodel_search(pair.left, fold_disj(right, Formula::bottom()), max_worlds)) {
    out.truth = Truth::Holds;
    out.certificate = std::move(cm);
    return out;
  }

  auto whole = oracle.provable({}, pair_implication(pair.left, pair.right));
  if (!whole.provable()) {
    out.note = whole.unknown() ? whole.note : "no single world separates the pair within the world bound";
    return out;
  }

  // Smallest provable subset pair.
  std::vector<Formula> items = left;
  items.insert(items.end(), right.begin(), right.end());
  SemanticFilter filter(items, max_worlds);
  bool unknown = false;
  for (std::size_t s = 0; s <= left.size() + right.size(); ++s) {
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> candidates;
    for (std::size_t a = (s > right.size() ? s - right.size() : 0); a <= std::min(s, left.size()); ++a)
      for (auto& l : combinations(left.size(), a))
        for (auto& r : combinations(right.size(), s - a)) candidates.emplace_back(l, r);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [l, r] : candidates) {
      std::vector<std::size_t> shifted;
      for (auto i : r) shifted.push_back(i + left.size());
      if (filter.refutes(l, shifted)) continue;
      FormulaSet phi, omega;
      for (auto i : l) phi.insert(left[i]);
      for (auto i : r) omega.insert(right[i]);
      auto v = oracle.provable({}, pair_implication(phi, omega));
      if (v.provable()) {
        out.truth = Truth::Fails;
        out.subsets = FormulaPair{std::move(phi), std::move(omega)};
        out.proof = v.witness;
        return out;
      }
      if (v.unknown()) unknown = true;
    }
  }
  // The whole implication is provable, so some subset pair must be; only
  // unknown verdicts can hide it.
  out.note = unknown ? "subset pair verdicts inconclusive" : "no provable subset pair found";
  return out;
}

AddStep add_formula_step(const FormulaPair& pair, const Formula& phi, const Oracle& oracle) {
  AddStep step;
  FormulaPair left = pair;
  left.left.insert(phi);
  auto v = pair_consistent(left, oracle);
  if (v.truth == Truth::Unknown)
    throw OracleInconclusive("consistency of the pair extended on the left by " + render(phi) + ": " + v.note);
  if (v.truth == Truth::Holds) {
    step.result = std::move(left);
    step.went_left = true;
    step.verdict = std::move(v);
    return step;
  }
  FormulaPair right = pair;
  right.right.insert(phi);
  auto w = pair_consistent(right, oracle);
  if (w.truth == Truth::Unknown)
    throw OracleInconclusive("consistency of the pair extended on the right by " + render(phi) + ": " + w.note);
  if (w.truth == Truth::Fails)
    throw std::invalid_argument("add_formula_to_pair: the input pair is not consistent");
  step.result = std::move(right);
  step.verdict = std::move(w);
  return step;
}

FormulaPair add_formula_to_pair(const FormulaPair& pair, const Formula& phi, const Oracle& oracle) {
  return add_formula_step(pair, phi, oracle).result;
}

Saturation saturate_pair(const FormulaPair& pair, const FormulaUniverse& u, const Oracle& oracle) {
  for (const auto* side : {&pair.left, &pair.right})
    for (const auto& f : *side)
      if (!u.contains(f)) throw std::invalid_argument("saturate_pair: " + render(f) + " is outside the universe");
  auto start = pair_consistent(pair, oracle);
  if (start.truth == Truth::Unknown) throw OracleInconclusive("consistency of the input pair: " + start.note);
  if (start.truth == Truth::Fails) throw std::invalid_argument("saturate_pair: the input pair is not consistent");

  Saturation out;
  out.trace.push_back(pair);
  FormulaPair cur = pair;
  for (const auto& f : u.items()) {
    auto step = add_formula_step(cur, f, oracle);
    cur = step.result;
    out.trace.push_back(cur);
    out.steps.push_back(std::move(step));
  }
  out.result = std::move(cur);
  return out;
}

bool family_increasing(const std::vector<FormulaPair>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    const auto &a = trace[i - 1], &b = trace[i];
    if (!std::includes(b.left.begin(), b.left.end(), a.left.begin(), a.left.end())) return false;
    if (!std::includes(b.right.begin(), b.right.end(), a.right.begin(), a.right.end())) return false;
  }
  return true;
}

bool family_increasing_check(const FormulaPair& pair, const FormulaUniverse& u, const Oracle& oracle) {
  return family_increasing(saturate_pair(pair, u, oracle).trace);
}

}  // namespace iplkit
