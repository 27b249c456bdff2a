#include "iplkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "iplkit/json_io.hpp"

namespace iplkit::cli {

namespace {

// Proofs larger than this (as trees) are summarized instead of printed.
constexpr std::uint64_t kMaxPrintedProof = 200000;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

FiniteHeytingAlgebra load_algebra(const std::string& arg) {
  for (const auto& h : algebra_catalog())
    if (h.name() == arg) return h;
  return algebra_from_json(read_json_file(arg));
}

// "p0=1,p1=2"
Assignment parse_assignment(const std::string& text, const FiniteHeytingAlgebra& h) {
  Assignment out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("assignment entries look like p0=1");
    Formula v = parse(item.substr(0, eq));
    if (!v.is_variable()) throw UsageError("assignment: " + item.substr(0, eq) + " is not a variable");
    std::size_t pos = 0;
    unsigned long e = 0;
    try {
      e = std::stoul(item.substr(eq + 1), &pos);
    } catch (const std::exception&) {
      throw UsageError("assignment: bad element in " + item);
    }
    if (item.substr(eq + 1 + pos).find_first_not_of(" \t") != std::string::npos)
      throw UsageError("assignment: bad element in " + item);
    if (e >= h.size()) throw UsageError("assignment: element " + std::to_string(e) + " is out of range");
    out[v.var()] = e;
  }
  return out;
}

ElementSet parse_elements(const std::string& text, const FiniteHeytingAlgebra& h) {
  ElementSet s = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    unsigned long e = 0;
    try {
      e = std::stoul(item);
    } catch (const std::exception&) {
      throw UsageError("bad element " + item);
    }
    if (e >= h.size()) throw UsageError("element " + std::to_string(e) + " is out of range");
    s |= ElementSet{1} << e;
  }
  return s;
}

Json proof_or_summary(const ProofTerm& p) {
  auto n = proof_tree_size(p);
  if (n > kMaxPrintedProof) return Json{{"omitted", true}, {"tree_size", n}, {"dag_size", p.dag_size()}};
  return proof_to_json(p);
}

Json verdict_to_json(const ProvabilityVerdict& v) {
  Json out{{"verdict", std::string(kind_name(v.kind))}};
  if (v.witness) out["proof"] = proof_or_summary(*v.witness);
  if (v.countermodel) out["countermodel"] = countermodel_to_json(*v.countermodel);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

int status_of(const ProvabilityVerdict& v) { return v.provable() ? kPositive : v.refuted() ? kNegative : kUnknown; }

OracleBudget budget_with(std::size_t max_worlds) {
  OracleBudget b = OracleBudget::from_env();
  if (max_worlds) b.max_worlds = max_worlds;
  return b;
}

struct Context {
  std::ostream& out;
  int status = kPositive;
  void emit(const Json& j, int s) {
    out << j.dump(2) << "\n";
    status = s;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intuitionistic propositional logic toolkit. Each subcommand prints one JSON document.\n"
               "Exit status: 0 positive, 1 negative with witness, 2 usage or input error, 3 unknown.", "iplkit"};
  app.require_subcommand(1);
  Context ctx{out};
  std::function<void()> action;

  std::string formula, gamma, file, file2, text, side;
  std::size_t world = 0, max_worlds = 0, vars = 2, depth = 1, element = 0;
  std::string left, right;

  auto* c_parse = app.add_subcommand("parse", "Parse a formula and print its normal rendering");
  c_parse->add_option("formula", formula, "Formula text")->required();
  c_parse->callback([&] {
    action = [&] {
      Formula f = parse(formula);
      Json vs = Json::array();
      for (auto v : variables(f)) vs.push_back("p" + std::to_string(v.index));
      ctx.emit(Json{{"formula", render(f)}, {"depth", f.depth()}, {"size", f.size()}, {"variables", vs}}, kPositive);
    };
  });

  auto* c_encode = app.add_subcommand("encode", "Code number of a formula");
  c_encode->add_option("formula", formula, "Formula text")->required();
  c_encode->callback([&] { action = [&] { ctx.emit(Json{{"code", natural_to_json(encode(parse(formula)))}}, kPositive); }; });

  auto* c_decode = app.add_subcommand("decode", "Formula with a given code number; exit 1 if none");
  c_decode->add_option("code", text, "Decimal code")->required();
  c_decode->callback([&] {
    action = [&] {
      Natural n = natural_from_json(Json(text));
      auto f = decode(n);
      if (f) ctx.emit(Json{{"code", natural_to_json(n)}, {"formula", render(*f)}}, kPositive);
      else ctx.emit(Json{{"code", natural_to_json(n)}, {"formula", nullptr}}, kNegative);
    };
  });

  auto* c_check = app.add_subcommand("check-proof", "Check a proof JSON file and print its conclusion");
  c_check->add_option("proof", file, "Proof JSON file")->required();
  c_check->add_option("--gamma", gamma, "Comma separated premises");
  c_check->callback([&] {
    action = [&] {
      ProofTerm p = proof_from_json(read_json_file(file));
      FormulaSet g = parse_set(gamma);
      try {
        Formula c = check(g, p);
        ctx.emit(Json{{"ok", true}, {"conclusion", render(c)}}, kPositive);
      } catch (const ProofError& e) {
        ctx.emit(Json{{"ok", false},
                      {"error", std::string(proof_error_kind_name(e.kind()))},
                      {"path", render_path(e.path())},
                      {"formula", render(e.formula())},
                      {"message", e.what()}},
                 kNegative);
      }
    };
  });

  auto* c_eval = app.add_subcommand("eval", "Does a world of a model force a formula");
  c_eval->add_option("model", file, "Model JSON file")->required();
  c_eval->add_option("world", world, "World index")->required();
  c_eval->add_option("formula", formula, "Formula text")->required();
  c_eval->callback([&] {
    action = [&] {
      KripkeModel m = model_from_json(read_json_file(file));
      Formula f = parse(formula);
      bool forced = eval(m, world, f);
      Json ts = Json::array();
      WorldSet t = truth_set(m, f);
      for (std::size_t w = 0; w < m.num_worlds(); ++w)
        if ((t >> w) & 1U) ts.push_back(w);
      ctx.emit(Json{{"world", world}, {"forced", forced}, {"truth_set", ts}}, forced ? kPositive : kNegative);
    };
  });

  auto* c_valid = app.add_subcommand("valid", "Is a formula forced at every world of a model");
  c_valid->add_option("model", file, "Model JSON file")->required();
  c_valid->add_option("formula", formula, "Formula text")->required();
  c_valid->callback([&] {
    action = [&] {
      KripkeModel m = model_from_json(read_json_file(file));
      Formula f = parse(formula);
      WorldSet t = truth_set(m, f);
      Json j{{"valid", t == all_worlds(m.num_worlds())}};
      for (std::size_t w = 0; w < m.num_worlds(); ++w)
        if (!((t >> w) & 1U)) {
          j["refuting_world"] = w;
          break;
        }
      ctx.emit(j, j["valid"].get<bool>() ? kPositive : kNegative);
    };
  });

  auto* c_cm = app.add_subcommand("countermodel", "Search for a model and world forcing the premises but not the formula");
  c_cm->add_option("formula", formula, "Formula text")->required();
  c_cm->add_option("--gamma", gamma, "Comma separated premises");
  c_cm->add_option("--max-worlds", max_worlds, "World bound (default from IPLKIT_BUDGET)")->check(CLI::Range(1, 8));
  c_cm->callback([&] {
    action = [&] {
      const std::size_t bound = budget_with(max_worlds).max_worlds;
      auto c = countermodel_search(parse_set(gamma), parse(formula), bound);
      if (c) {
        Json j = countermodel_to_json(*c);
        j["found"] = true;
        ctx.emit(j, kNegative);
      } else {
        ctx.emit(Json{{"found", false}, {"max_worlds", bound}}, kUnknown);
      }
    };
  });

  auto* c_prove = app.add_subcommand("prove", "Certified provability verdict from the premises");
  c_prove->add_option("formula", formula, "Formula text")->required();
  c_prove->add_option("--gamma", gamma, "Comma separated premises");
  c_prove->add_option("--max-worlds", max_worlds, "Countermodel bound (default from IPLKIT_BUDGET)")->check(CLI::Range(1, 8));
  c_prove->callback([&] {
    action = [&] {
      auto v = oracle_provable(parse_set(gamma), parse(formula), budget_with(max_worlds));
      ctx.emit(verdict_to_json(v), status_of(v));
    };
  });

  auto* c_aeval = app.add_subcommand("alg-eval", "Value of a formula in an algebra under an assignment");
  c_aeval->add_option("algebra", file, "Algebra JSON file or catalog name (C3, C2xC2, ...)")->required();
  c_aeval->add_option("assignment", text, "Assignment such as p0=1,p1=2")->required();
  c_aeval->add_option("formula", formula, "Formula text")->required();
  c_aeval->callback([&] {
    action = [&] {
      auto h = load_algebra(file);
      Element e = interpret(h, parse_assignment(text, h), parse(formula));
      ctx.emit(Json{{"value", e}, {"top", h.top()}}, e == h.top() ? kPositive : kNegative);
    };
  });

  auto* c_avalid = app.add_subcommand("alg-valid", "Is a formula top under every assignment");
  c_avalid->add_option("algebra", file, "Algebra JSON file or catalog name")->required();
  c_avalid->add_option("formula", formula, "Formula text")->required();
  c_avalid->callback([&] {
    action = [&] {
      auto h = load_algebra(file);
      Formula f = parse(formula);
      auto a = alg_refutation(h, f);
      if (a) ctx.emit(Json{{"valid", false}, {"assignment", assignment_to_json(*a)}, {"value", interpret(h, *a, f)}}, kNegative);
      else ctx.emit(Json{{"valid", true}}, kPositive);
    };
  });

  auto* c_filters = app.add_subcommand("filters", "All filters of an algebra");
  c_filters->add_option("algebra", file, "Algebra JSON file or catalog name")->required();
  c_filters->callback([&] {
    action = [&] {
      Json fs = Json::array();
      for (auto f : filters(load_algebra(file))) fs.push_back(elements_to_json(f));
      ctx.emit(Json{{"filters", fs}}, kPositive);
    };
  });

  auto* c_prime = app.add_subcommand("prime-filters", "Prime filters of an algebra");
  c_prime->add_option("algebra", file, "Algebra JSON file or catalog name")->required();
  c_prime->callback([&] {
    action = [&] {
      Json fs = Json::array();
      for (auto f : prime_filters(load_algebra(file))) fs.push_back(elements_to_json(f));
      ctx.emit(Json{{"prime_filters", fs}}, kPositive);
    };
  });

  auto* c_super = app.add_subcommand("super-prime", "Prime filter extending a filter and avoiding an element");
  c_super->add_option("algebra", file, "Algebra JSON file or catalog name")->required();
  c_super->add_option("filter", text, "Comma separated elements of the filter")->required();
  c_super->add_option("element", element, "Element to avoid")->required();
  c_super->callback([&] {
    action = [&] {
      auto h = load_algebra(file);
      if (element >= h.size()) throw UsageError("element out of range");
      ElementSet p = super_prime_filter(h, parse_elements(text, h), element);
      ctx.emit(Json{{"prime_filter", elements_to_json(p)}}, kPositive);
    };
  });

  auto* c_bridge = app.add_subcommand("bridge", "Closed-set algebra of a model, or prime-filter frame of an algebra");
  c_bridge->require_subcommand(1);
  auto* c_k2a = c_bridge->add_subcommand("k2a", "Closed-set algebra of a model");
  c_k2a->add_option("model", file, "Model JSON file")->required();
  c_k2a->callback([&] {
    action = [&] {
      KripkeModel m = model_from_json(read_json_file(file));
      auto a = closed_set_algebra(m);
      Json carrier = Json::array();
      for (auto s : a.carrier) carrier.push_back(elements_to_json(s));
      Json j = algebra_to_json(a.algebra);
      j["carrier"] = carrier;
      j["assignment"] = assignment_to_json(closed_assignment(a, m));
      ctx.emit(j, kPositive);
    };
  });
  auto* c_a2k = c_bridge->add_subcommand("a2k", "Prime-filter frame of an algebra");
  c_a2k->add_option("algebra", file, "Algebra JSON file or catalog name")->required();
  c_a2k->add_option("assignment", text, "Assignment such as p0=1")->required();
  c_a2k->callback([&] {
    action = [&] {
      auto h = load_algebra(file);
      auto frame = prime_filter_frame(h, parse_assignment(text, h));
      Json j = model_to_json(frame.model);
      Json ws = Json::array();
      for (auto p : frame.worlds) ws.push_back(elements_to_json(p));
      j["prime_filters"] = ws;
      ctx.emit(j, kPositive);
    };
  });

  auto* c_sat = app.add_subcommand("saturate-pair", "Saturate a consistent pair over a canonical universe");
  c_sat->add_option("--left", left, "Comma separated left formulas");
  c_sat->add_option("--right", right, "Comma separated right formulas");
  c_sat->add_option("--vars", vars, "Universe variables p0..p(k-1)")->check(CLI::Range(0, 3));
  c_sat->add_option("--depth", depth, "Universe connective depth")->check(CLI::Range(0, 2));
  c_sat->callback([&] {
    action = [&] {
      auto u = FormulaUniverse::canonical(vars, depth);
      Oracle oracle;
      try {
        auto s = saturate_pair({parse_set(left), parse_set(right)}, u, oracle);
        Json steps = Json::array();
        for (std::size_t i = 0; i < s.steps.size(); ++i)
          steps.push_back(Json{{"formula", render(u.enumeration(i))}, {"side", s.steps[i].went_left ? "left" : "right"}});
        ctx.emit(Json{{"result", pair_to_json(s.result)},
                      {"steps", steps},
                      {"increasing", family_increasing(s.trace)}},
                 kPositive);
      } catch (const OracleInconclusive& e) {
        ctx.emit(Json{{"verdict", "Unknown"}, {"note", e.what()}}, kUnknown);
      }
    };
  });

  auto* c_quot = app.add_subcommand("quotient", "Provable-equivalence classes of a canonical universe");
  c_quot->add_option("--gamma", gamma, "Comma separated premises");
  c_quot->add_option("--vars", vars, "Universe variables p0..p(k-1)")->check(CLI::Range(0, 3));
  c_quot->add_option("--depth", depth, "Universe connective depth")->check(CLI::Range(0, 2));
  c_quot->callback([&] {
    action = [&] {
      Oracle oracle;
      try {
        auto t = build_quotient(parse_set(gamma), FormulaUniverse::canonical(vars, depth), oracle);
        ctx.emit(quotient_to_json(t), kPositive);
      } catch (const OracleInconclusive& e) {
        ctx.emit(Json{{"verdict", "Unknown"}, {"note", e.what()}}, kUnknown);
      }
    };
  });

  auto* c_harness = app.add_subcommand("harness", "Compare model and algebra validity over a canonical universe");
  c_harness->add_option("--vars", vars, "Formula variables p0..p(k-1)")->check(CLI::Range(0, 2));
  c_harness->add_option("--depth", depth, "Formula connective depth")->check(CLI::Range(0, 2));
  c_harness->add_option("--max-worlds", max_worlds, "Models with 1..N worlds (default 3)")->check(CLI::Range(1, 4));
  c_harness->callback([&] {
    action = [&] {
      std::vector<KripkeModel> models;
      for (std::size_t n = 1; n <= (max_worlds ? max_worlds : 3); ++n)
        for (auto& m : enumerate_models(vars, n)) models.push_back(m);
      auto formulas = FormulaUniverse::canonical(vars, depth).items();
      auto entries = validity_equiv_harness(formulas, models, algebra_catalog());
      std::size_t agree = 0, kripke_valid = 0;
      Json disc = Json::array();
      for (const auto& e : entries) {
        if (e.kripke_valid == e.algebra_valid) ++agree;
        if (e.kripke_valid) ++kripke_valid;
        for (const auto& d : e.discrepancies) disc.push_back(Json{{"formula", render(e.formula)}, {"detail", d}});
        if (e.kripke_valid != e.algebra_valid)
          disc.push_back(Json{{"formula", render(e.formula)},
                              {"detail", e.kripke_valid ? "valid in every model, refuted by an algebra"
                                                        : "refuted by a model, valid in every algebra"}});
      }
      ctx.emit(Json{{"formulas", entries.size()},
                    {"models", models.size()},
                    {"algebras", algebra_catalog().size()},
                    {"valid", kripke_valid},
                    {"agreeing", agree},
                    {"discrepancies", disc}},
               disc.empty() ? kPositive : kNegative);
    };
  });

  auto* c_universe = app.add_subcommand("universe", "Canonical universe: formulas up to a depth, by code");
  c_universe->add_option("--vars", vars, "Variables p0..p(k-1)")->check(CLI::Range(0, 3));
  c_universe->add_option("--depth", depth, "Connective depth")->check(CLI::Range(0, 2));
  c_universe->callback([&] {
    action = [&] {
      auto u = FormulaUniverse::canonical(vars, depth);
      Json items = Json::array();
      for (std::size_t i = 0; i < u.size(); ++i)
        items.push_back(Json{{"index", i}, {"formula", render(u.enumeration(i))}, {"code", natural_to_json(encode(u.enumeration(i)))}});
      ctx.emit(Json{{"size", u.size()}, {"items", items}}, kPositive);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return ctx.status;
}

}  // namespace iplkit::cli
