// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "iplkit/bridge.hpp"
#include "iplkit/catalog.hpp"
#include "iplkit/lindenbaum.hpp"
#include "support/oracles.hpp"

using namespace iplkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<KripkeModel> models_upto(std::size_t vars, std::size_t worlds) {
  std::vector<KripkeModel> out;
  for (std::size_t n = 1; n <= worlds; ++n)
    for (const auto& m : enumerate_models(vars, n)) out.push_back(m);
  return out;
}

bool forces_all(const KripkeModel& m, std::size_t w, const FormulaSet& gamma) {
  for (const auto& g : gamma)
    if (!oracle::force(m, w, g)) return false;
  return true;
}

// Gamma forces phi at every world of every model.
bool kripke_consequence(const std::vector<KripkeModel>& models, const FormulaSet& gamma, const Formula& phi) {
  for (const auto& m : models) {
    WorldSet g = forcing_worlds(m, gamma);
    if ((g & ~truth_set(m, phi)) != 0) return false;
  }
  return true;
}

Outcome kernel_soundness() {
  Outcome o;
  const auto formulas = enumerate_formulas(2, 1);
  const auto models = models_upto(2, 3);
  const auto& algebras = algebra_catalog();
  std::size_t instances = 0, theorems = 0;
  std::map<std::pair<FormulaSet, Formula>, bool> seen;
  for (const auto& entry : catalog()) {
    std::vector<std::size_t> pick(entry.arity, 0);
    while (true) {
      std::vector<Formula> args;
      for (auto i : pick) args.push_back(formulas[i]);
      ++instances;
      auto [gamma, d] = instantiate(entry, args);
      std::optional<Formula> checked;
      try {
        checked = check(gamma, d.term);
      } catch (const ProofError& e) {
        o.fail(entry.name + ": " + e.what());
        return o;
      }
      const Formula c = *checked;
      if (c != entry.conclusion(args)) o.fail(entry.name + ": conclusion differs from the schema");
      if (gamma.empty()) ++theorems;
      auto [it, fresh] = seen.emplace(std::make_pair(gamma, c), true);
      if (fresh) {
        if (!kripke_consequence(models, gamma, c))
          o.fail(entry.name + ": " + render(c) + " fails in some model");
        if (alg_sem_conseq_over(algebras, gamma, c).holds == false)
          o.fail(entry.name + ": " + render(c) + " fails in some algebra");
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == formulas.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  if (catalog().size() < 15) o.fail("catalog has only " + std::to_string(catalog().size()) + " entries");
  o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(catalog().size()) + " entries, " +
             std::to_string(instances) + " instances (" + std::to_string(theorems) + " theorems), " +
             std::to_string(models.size()) + " models, " + std::to_string(algebras.size()) + " algebras";
  return o;
}

Outcome refutations() {
  Outcome o;
  for (const char* text : {"p0 | ~p0", "((p0->p1)->p0)->p0", "~~p0 -> p0"}) {
    Formula f = parse(text);
    auto c = countermodel_search({}, f, 2);
    if (!c) {
      o.fail(std::string(text) + " not refuted");
      continue;
    }
    if (!validate_model(c->model).empty()) o.fail(std::string(text) + ": model fails validation");
    if (oracle::force(c->model, c->world, f)) o.fail(std::string(text) + ": refuting world forces it");
    if (eval(c->model, c->world, f)) o.fail(std::string(text) + ": eval disagrees");
  }
  for (const char* text : {"p0 -> p0", "bot -> p0"})
    if (countermodel_search({}, parse(text), 4)) o.fail(std::string(text) + " refuted");
  if (o.pass) o.detail = "3 refuted within 2 worlds, 2 unrefuted within 4";
  return o;
}

Outcome encoding() {
  Outcome o;
  // Formula trees of height <= 3, i.e. connective depth <= 2.
  const auto formulas = enumerate_formulas(2, 2);
  std::set<Natural> codes;
  for (const auto& f : formulas) {
    Natural c = encode(f);
    if (!codes.insert(c).second) o.fail("code collision at " + render(f));
    auto back = decode(c);
    if (!back || *back != f) o.fail("decode(encode(" + render(f) + ")) differs");
  }
  if (encode(Formula::bottom()) != 0) o.fail("encode(bot) is not 0");
  if (o.pass) o.detail = std::to_string(formulas.size()) + " formulas, all codes distinct, encode(bot) = 0";
  return o;
}

Outcome filter_theory() {
  Outcome o;
  std::size_t algebras = 0, pairs = 0, triples = 0;
  for (const auto& h : algebra_catalog()) {
    if (h.size() > 6) continue;
    ++algebras;
    const std::string tag = h.name() + ": ";
    for (ElementSet x = 0; x < (ElementSet{1} << h.size()); ++x) {
      auto a = generated_filter_by_intersection(h, x);
      auto b = generated_filter_by_meets(h, x);
      if (a != b) o.fail(tag + "generated filters differ on " + render_elements(x));
      if (a != oracle::least_filter(h, x)) o.fail(tag + "generated filter is not least on " + render_elements(x));
    }
    const auto fs = oracle::all_filters(h);
    for (auto f : fs)
      for (Element x = 0; x < h.size(); ++x) {
        if ((f >> x) & 1U) continue;
        ++pairs;
        ElementSet p = super_prime_filter(h, f, x);
        if (!oracle::is_prime(h, p) || (f & ~p) != 0 || ((p >> x) & 1U))
          o.fail(tag + "super_prime_filter(" + render_elements(f) + ", " + std::to_string(x) + ")");
      }
    ElementSet meet_all = h.all();
    for (auto f : fs)
      if (oracle::is_prime(h, f)) meet_all &= f;
    if (prime_intersection(h) != (ElementSet{1} << h.top()) || meet_all != (ElementSet{1} << h.top()))
      o.fail(tag + "prime filters do not meet in {top}");
    for (auto f : fs)
      for (Element x = 0; x < h.size(); ++x)
        for (Element y = 0; y < h.size(); ++y) {
          ++triples;
          if (!himp_not_mem_check(h, f, x, y)) o.fail(tag + "himp_not_mem_check");
          // Independently: himp(x, y) not in F implies y not in the least
          // filter containing F and x.
          if (!((f >> h.himp(x, y)) & 1U) && ((oracle::least_filter(h, f | (ElementSet{1} << x)) >> y) & 1U))
            o.fail(tag + "himp outside F but y generated");
        }
  }
  if (o.pass)
    o.detail = std::to_string(algebras) + " algebras, " + std::to_string(pairs) + " (F, x) pairs, " +
               std::to_string(triples) + " triples";
  return o;
}

Outcome bridge() {
  Outcome o;
  const auto formulas = enumerate_formulas(2, 2);
  const auto models = models_upto(2, 3);
  std::size_t k2a = 0, a2k = 0;
  for (const auto& m : models) {
    auto a = closed_set_algebra(m);
    if (!validate_algebra(a.algebra).empty()) o.fail("closed-set algebra fails validation");
    for (const auto& f : formulas) {
      ++k2a;
      if (!kripke_to_alg_check(m, a, f)) o.fail("kripke_to_alg_check: " + render(f));
    }
  }
  const VarSet vars{Var{0}, Var{1}};
  for (const auto& h : algebra_catalog())
    for (const auto& i : assignments(h, vars)) {
      auto frame = prime_filter_frame(h, i);
      for (const auto& f : formulas) {
        ++a2k;
        if (!alg_to_kripke_check(h, frame, i, f)) o.fail("alg_to_kripke_check on " + h.name() + ": " + render(f));
      }
    }
  auto chain2 = KripkeModel::from_edges(2, {{0, 1}}, {{Var{0}, 0b10}});
  if (!algebra_isomorphism(closed_set_algebra(chain2).algebra, chain_algebra(3)))
    o.fail("closed sets of the 2-world chain are not the 3-chain");
  if (!model_isomorphism(prime_filter_frame(chain_algebra(3), {{Var{0}, 1}}).model, chain2))
    o.fail("prime filters of the 3-chain are not the 2-world chain");
  if (o.pass)
    o.detail = std::to_string(k2a) + " model checks, " + std::to_string(a2k) + " algebra checks, both isomorphisms";
  return o;
}

struct DeductionCase {
  FormulaSet gamma;
  Formula hyp;
  ProofTerm proof;
};

std::vector<DeductionCase> deduction_corpus() {
  std::vector<DeductionCase> out;
  auto add = [&](const char* gamma, const char* hyp, ProofTerm p) { out.push_back({parse_set(gamma), parse(hyp), p}); };
  auto prem = [](const char* f) { return ProofTerm::premise(parse(f)); };
  auto cat = [](const char* name, std::vector<const char*> args, std::vector<Derivation> ds = {}) {
    std::vector<Formula> fs;
    for (auto a : args) fs.push_back(parse(a));
    return derived(name, fs, ds).term;
  };
  const auto p0 = parse("p0"), p1 = parse("p1");
  add("", "p0", prem("p0"));
  add("p1", "p0", prem("p1"));
  add("", "p0", cat("identity", {"p1"}));
  add("p0 -> p1", "p0", ProofTerm::modus_ponens(prem("p0"), prem("p0 -> p1")));
  add("p0", "p0 -> p1", ProofTerm::modus_ponens(prem("p0"), prem("p0 -> p1")));
  add("p1 -> p2", "p0 -> p1", ProofTerm::syllogism(prem("p0 -> p1"), prem("p1 -> p2")));
  add("p0 -> p1", "p1 -> p2", ProofTerm::syllogism(prem("p0 -> p1"), prem("p1 -> p2")));
  add("", "p0 & p1 -> p2", ProofTerm::exportation(prem("p0 & p1 -> p2")));
  add("", "p0 -> p1 -> p2", ProofTerm::importation(prem("p0 -> p1 -> p2")));
  add("", "p0 -> p1", ProofTerm::expansion(parse("p2"), prem("p0 -> p1")));
  add("", "p0", ProofTerm::modus_ponens(prem("p0"), ProofTerm::weakening_disj(p0, p1)));
  add("", "p0 & p1", ProofTerm::modus_ponens(prem("p0 & p1"), ProofTerm::weakening_conj(p0, p1)));
  add("", "p0 & p1",
      ProofTerm::modus_ponens(ProofTerm::modus_ponens(prem("p0 & p1"), ProofTerm::permutation_conj(p0, p1)),
                              ProofTerm::weakening_conj(p1, p0)));
  add("", "bot", ProofTerm::modus_ponens(prem("bot"), ProofTerm::exfalso(parse("p0 | p1"))));
  add("p0", "p1",
      cat("andIntroRule", {"p0", "p1"}, {derive::premise(p0), derive::premise(p1)}));
  add("p0 -> p2", "p1 -> p2",
      cat("orElimRule", {"p0", "p1", "p2"}, {derive::premise(parse("p0 -> p2")), derive::premise(parse("p1 -> p2"))}));
  add("", "p0 -> p1", cat("conjMonotone", {"p0", "p1", "p2"}, {derive::premise(parse("p0 -> p1"))}));
  add("~p0", "p0", cat("negElim", {"p0"}, {derive::premise(p0), derive::premise(parse("~p0"))}));
  add("p0, p1", "p0 -> p1 -> p2",
      ProofTerm::modus_ponens(prem("p1"), ProofTerm::modus_ponens(prem("p0"), prem("p0 -> p1 -> p2"))));
  // Proofs found by the sequent search.
  const std::vector<std::tuple<const char*, const char*, const char*>> searched = {
      {"p0 -> p1", "p1 -> p2", "p0 -> p2"},
      {"", "p0 & p1", "p1 & p0"},
      {"", "p0 | p1", "p1 | p0"},
      {"", "p0", "~~p0"},
      {"p0 -> p1", "~p1", "~p0"},
      {"", "(p0 -> p1) & (p0 -> p2)", "p0 -> p1 & p2"},
      {"p2", "p0 | p1", "(p0 & p2) | (p1 & p2)"},
      {"", "~~(p0 -> p1)", "~~p0 -> ~~p1"},
  };
  for (const auto& [g, h, goal] : searched) {
    FormulaSet ext = parse_set(g);
    ext.insert(parse(h));
    auto r = search_proof(ext, parse(goal), ProverLimits{});
    if (r.proof) out.push_back({parse_set(g), parse(h), *r.proof});
  }
  return out;
}

Outcome deduction() {
  Outcome o;
  auto corpus = deduction_corpus();
  for (const auto& c : corpus) {
    FormulaSet ext = c.gamma;
    ext.insert(c.hyp);
    Formula psi = check(ext, c.proof);
    ProofTerm lifted = deduction_theorem(c.gamma, c.hyp, c.proof);
    try {
      if (check(c.gamma, lifted) != Formula::implies(c.hyp, psi))
        o.fail("wrong conclusion for " + render(c.hyp) + " / " + render(psi));
    } catch (const ProofError& e) {
      o.fail(render(c.hyp) + " / " + render(psi) + ": " + e.what());
    }
  }
  if (corpus.size() < 20) o.fail("corpus has only " + std::to_string(corpus.size()) + " triples");
  if (o.pass) o.detail = std::to_string(corpus.size()) + " triples";
  return o;
}

Outcome saturation() {
  Outcome o;
  const auto u = FormulaUniverse::canonical(2, 1);
  const FormulaPair input{{parse("p0")}, {parse("p1")}};
  Oracle oracle(OracleBudget{});
  Saturation s;
  try {
    s = saturate_pair(input, u, oracle);
  } catch (const OracleInconclusive& e) {
    o.fail(std::string("Unknown verdict: ") + e.what());
    return o;
  }
  const auto& [l, r] = s.result;
  for (const auto& f : u.items())
    if (l.contains(f) == r.contains(f)) o.fail(render(f) + " is not on exactly one side");
  if (l.size() + r.size() != u.size()) o.fail("result has formulas outside the universe");
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& v = s.steps[i].verdict;
    if (v.truth != Truth::Holds || !v.certificate) {
      o.fail("step " + std::to_string(i) + " is not certified consistent");
      continue;
    }
    // The certificate world forces every left formula and no right one.
    const auto& c = *v.certificate;
    const auto& p = s.trace[i + 1];
    if (!forces_all(c.model, c.world, p.left)) o.fail("step " + std::to_string(i) + ": certificate misses a left formula");
    for (const auto& f : p.right)
      if (oracle::force(c.model, c.world, f)) o.fail("step " + std::to_string(i) + ": certificate forces a right formula");
  }
  if (!family_increasing(s.trace)) o.fail("trace is not increasing");
  for (std::size_t i = 0; i + 1 < s.trace.size(); ++i) {
    const auto& a = s.trace[i];
    const auto& b = s.trace[i + 1];
    if (!std::includes(b.left.begin(), b.left.end(), a.left.begin(), a.left.end()) ||
        !std::includes(b.right.begin(), b.right.end(), a.right.begin(), a.right.end()))
      o.fail("trace shrinks at step " + std::to_string(i));
  }
  if (!std::includes(l.begin(), l.end(), input.left.begin(), input.left.end()) ||
      !std::includes(r.begin(), r.end(), input.right.begin(), input.right.end()))
    o.fail("result does not contain the input");
  if (o.pass)
    o.detail = std::to_string(u.size()) + " formulas, " + std::to_string(l.size()) + " left, " +
               std::to_string(r.size()) + " right";
  return o;
}

Outcome lindenbaum() {
  Outcome o;
  Oracle oracle(OracleBudget{});
  const auto u0 = FormulaUniverse::canonical(0, 2);
  auto t0 = build_quotient({}, u0, oracle);
  if (t0.classes.size() != 2) o.fail(std::to_string(t0.classes.size()) + " classes, expected 2");
  // Variable-free formulas are provable exactly when they are tautologies.
  for (std::size_t i = 0; i < u0.size(); ++i)
    if (t0.provable_top[t0.class_of[i]] != oracle::tautology(u0.enumeration(i), 0))
      o.fail(render(u0.enumeration(i)) + " is in the wrong class");
  if (!true_in_lt_check(t0, oracle)) o.fail("true_in_lt fails without variables");
  if (!quotient_op_check(t0)) o.fail("quotient operations ill defined without variables");
  const auto u1 = FormulaUniverse::canonical(1, 1);
  auto t1 = build_quotient({parse("p0")}, u1, oracle);
  if (!true_in_lt_check(t1, oracle)) o.fail("true_in_lt fails under p0");
  if (!quotient_op_check(t1)) o.fail("quotient operations ill defined under p0");
  if (o.pass)
    o.detail = std::to_string(u0.size()) + " formulas in 2 classes; " + std::to_string(u1.size()) +
               " formulas in " + std::to_string(t1.classes.size()) + " classes under p0";
  return o;
}

Outcome classical() {
  Outcome o;
  const auto formulas = enumerate_formulas(2, 2);
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    // Identity relation; world w gets the truth-table row rows[w].
    std::vector<WorldSet> rel(n);
    for (std::size_t w = 0; w < n; ++w) rel[w] = WorldSet{1} << w;
    std::vector<unsigned> rows(n, 0);
    while (true) {
      Valuation val;
      for (unsigned v = 0; v < 2; ++v) {
        WorldSet s = 0;
        for (std::size_t w = 0; w < n; ++w)
          if ((rows[w] >> v) & 1U) s |= WorldSet{1} << w;
        val[Var{v}] = s;
      }
      KripkeModel m(rel, val);
      for (const auto& f : formulas)
        for (std::size_t w = 0; w < n; ++w) {
          ++checks;
          if (eval(m, w, f) != oracle::truth_table(f, rows[w])) o.fail("eval differs from truth table on " + render(f));
        }
      std::size_t w = 0;
      while (w < n && ++rows[w] == 4) rows[w++] = 0;
      if (w == n) break;
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " evaluations";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "kernel soundness sweep", 60, kernel_soundness},
      {2, "intuitionistic refutations", 10, refutations},
      {3, "encoding", 10, encoding},
      {4, "filter theory", 60, filter_theory},
      {5, "bridge biconditionals", 300, bridge},
      {6, "deduction theorem", 10, deduction},
      {7, "pair saturation", 60, saturation},
      {8, "lindenbaum quotient", 60, lindenbaum},
      {9, "classical degeneracy", 10, classical},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      std::ostringstream msg;
      msg << "took longer than " << c.limit_seconds << " s";
      o.fail(msg.str());
    }
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
