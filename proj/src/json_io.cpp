#include "iplkit/json_io.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace iplkit {

namespace {

[[noreturn]] void bad(const std::string& what) { throw JsonFormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_of(const Json& j, std::size_t limit, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) bad(what + ": expected an index");
  auto v = j.get<std::uint64_t>();
  if (v >= limit) bad(what + ": index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

Json table_to_json(const FiniteHeytingAlgebra& h, Element (FiniteHeytingAlgebra::*op)(Element, Element) const) {
  Json rows = Json::array();
  for (Element a = 0; a < h.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < h.size(); ++b) row.push_back((h.*op)(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

Table table_from_json(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) bad(what + ": expected " + std::to_string(n) + " rows");
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!j[a].is_array() || j[a].size() != n) bad(what + ": row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index_of(j[a][b], n, what);
  }
  return t;
}

}  // namespace

Json natural_to_json(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(n));
  return Json(n.str());
}

Natural natural_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Natural(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) bad("code: expected decimal digits");
    return Natural(s);
  }
  bad("code: expected a natural number");
}

Json proof_to_json(const ProofTerm& p) {
  Json formulas = Json::array();
  for (const auto& f : p.formulas()) formulas.push_back(render(f));
  Json subs = Json::array();
  for (const auto& s : p.subproofs()) subs.push_back(proof_to_json(s));
  return Json{{"rule", std::string(rule_name(p.rule()))}, {"formulas", formulas}, {"subproofs", subs}};
}

ProofTerm proof_from_json(const Json& j) {
  const Json& rule = field(j, "rule");
  if (!rule.is_string()) bad("rule: expected a string");
  auto r = rule_from_name(rule.get<std::string>());
  if (!r) bad("unknown rule \"" + rule.get<std::string>() + "\"");
  std::vector<Formula> formulas;
  if (j.contains("formulas")) {
    if (!j["formulas"].is_array()) bad("formulas: expected an array");
    for (const auto& f : j["formulas"]) {
      if (!f.is_string()) bad("formulas: expected strings");
      formulas.push_back(parse(f.get<std::string>()));
    }
  }
  std::vector<ProofTerm> subs;
  if (j.contains("subproofs")) {
    if (!j["subproofs"].is_array()) bad("subproofs: expected an array");
    for (const auto& s : j["subproofs"]) subs.push_back(proof_from_json(s));
  }
  try {
    return ProofTerm::make(*r, std::move(formulas), std::move(subs));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

std::uint64_t proof_tree_size(const ProofTerm& p) {
  std::unordered_map<const void*, std::uint64_t> memo;
  auto go = [&](auto&& self, const ProofTerm& t) -> std::uint64_t {
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
    std::uint64_t n = 1;
    for (const auto& s : t.subproofs()) {
      n += self(self, s);
      if (n > (std::uint64_t{1} << 62)) n = std::uint64_t{1} << 62;
    }
    memo.emplace(t.id(), n);
    return n;
  };
  return go(go, p);
}

Json model_to_json(const KripkeModel& m) {
  Json rel = Json::array();
  for (std::size_t i = 0; i < m.num_worlds(); ++i)
    for (std::size_t j = 0; j < m.num_worlds(); ++j)
      if (i != j && m.related(i, j)) rel.push_back({i, j});
  Json val = Json::object();
  std::size_t vars = 0;
  for (const auto& [v, s] : m.valuation()) {
    Json ws = Json::array();
    for (std::size_t w = 0; w < m.num_worlds(); ++w)
      if ((s >> w) & 1U) ws.push_back(w);
    val["p" + std::to_string(v.index)] = ws;
    vars = std::max<std::size_t>(vars, v.index + 1);
  }
  return Json{{"worlds", m.num_worlds()}, {"rel", rel}, {"vars", vars}, {"val", val}};
}

KripkeModel model_from_json(const Json& j) {
  const std::size_t n = index_of(field(j, "worlds"), kMaxWorlds + 1, "worlds");
  if (n == 0) bad("worlds: a model needs at least one world");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (j.contains("rel")) {
    if (!j["rel"].is_array()) bad("rel: expected an array of pairs");
    for (const auto& e : j["rel"]) {
      if (!e.is_array() || e.size() != 2) bad("rel: expected pairs [i, j]");
      edges.emplace_back(index_of(e[0], n, "rel"), index_of(e[1], n, "rel"));
    }
  }
  const std::size_t k = j.contains("vars") ? index_of(j["vars"], 1U << 20, "vars") : 0;
  Valuation val;
  for (std::size_t v = 0; v < k; ++v) val.emplace(Var{static_cast<std::uint32_t>(v)}, 0);
  if (j.contains("val")) {
    if (!j["val"].is_object()) bad("val: expected an object");
    for (const auto& [name, worlds] : j["val"].items()) {
      Formula f = [&] {
        try {
          return parse(name);
        } catch (const ParseError&) {
          bad("val: bad variable name \"" + name + "\"");
        }
      }();
      if (!f.is_variable()) bad("val: bad variable name \"" + name + "\"");
      if (f.var().index >= k) bad("val: " + name + " is not below vars");
      if (!worlds.is_array()) bad("val: expected world lists");
      WorldSet s = 0;
      for (const auto& w : worlds) s |= WorldSet{1} << index_of(w, n, "val");
      val[f.var()] = s;
    }
  }
  auto m = KripkeModel::from_edges(n, edges, std::move(val));
  auto violations = validate_model(m);
  if (!violations.empty()) bad("model fails validation: " + describe(violations.front()));
  return m;
}

Json countermodel_to_json(const Countermodel& c) { return Json{{"model", model_to_json(c.model)}, {"world", c.world}}; }

Json algebra_to_json(const FiniteHeytingAlgebra& h) {
  Json le = Json::array();
  for (Element a = 0; a < h.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < h.size(); ++b) row.push_back(h.le(a, b));
    le.push_back(std::move(row));
  }
  return Json{{"name", h.name()},
              {"size", h.size()},
              {"le", le},
              {"bot", h.bot()},
              {"top", h.top()},
              {"meet", table_to_json(h, &FiniteHeytingAlgebra::meet)},
              {"join", table_to_json(h, &FiniteHeytingAlgebra::join)},
              {"himp", table_to_json(h, &FiniteHeytingAlgebra::himp)}};
}

FiniteHeytingAlgebra algebra_from_json(const Json& j) {
  const std::size_t n = index_of(field(j, "size"), kMaxElements + 1, "size");
  if (n == 0) bad("size: an algebra needs at least one element");
  const Json& le = field(j, "le");
  if (!le.is_array() || le.size() != n) bad("le: expected " + std::to_string(n) + " rows");
  OrderRows rows(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!le[a].is_array() || le[a].size() != n) bad("le: row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (!le[a][b].is_boolean()) bad("le: expected booleans");
      if (le[a][b].get<bool>()) rows[a] |= ElementSet{1} << b;
    }
  }
  const Element bot = index_of(field(j, "bot"), n, "bot");
  const Element top = index_of(field(j, "top"), n, "top");
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "algebra";
  const bool given = j.contains("meet") || j.contains("join") || j.contains("himp");
  std::optional<FiniteHeytingAlgebra> h;
  try {
    if (given) {
      Lattice l{n, rows, {}, {}, bot, top};
      Table himp;
      Lattice derived;
      bool have_derived = false;
      auto derive_lattice = [&] {
        if (!have_derived) derived = lattice_from_order(rows, bot, top);
        have_derived = true;
      };
      if (j.contains("meet")) {
        l.meet = table_from_json(j["meet"], n, "meet");
      } else {
        derive_lattice();
        l.meet = derived.meet;
      }
      if (j.contains("join")) {
        l.join = table_from_json(j["join"], n, "join");
      } else {
        derive_lattice();
        l.join = derived.join;
      }
      himp = j.contains("himp") ? table_from_json(j["himp"], n, "himp") : himp_from_order(l);
      h.emplace(name, std::move(l), std::move(himp));
    } else {
      h.emplace(FiniteHeytingAlgebra::from_order(name, rows, bot, top));
    }
  } catch (const JsonFormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    bad(std::string("algebra rejected: ") + e.what());
  }
  auto violations = validate_algebra(*h);
  if (!violations.empty()) bad("algebra fails validation: " + describe(violations.front()));
  return *h;
}

Json elements_to_json(ElementSet s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < kMaxElements; ++i)
    if ((s >> i) & 1U) out.push_back(i);
  return out;
}

Json assignment_to_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [v, e] : a) out["p" + std::to_string(v.index)] = e;
  return out;
}

Json formulas_to_json(const FormulaSet& s) {
  std::vector<Formula> items(s.begin(), s.end());
  std::sort(items.begin(), items.end(), [](const Formula& a, const Formula& b) { return encode(a) < encode(b); });
  Json out = Json::array();
  for (const auto& f : items) out.push_back(render(f));
  return out;
}

Json pair_to_json(const FormulaPair& p) { return Json{{"left", formulas_to_json(p.left)}, {"right", formulas_to_json(p.right)}}; }

Json quotient_to_json(const QuotientTable& t) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    Json members = Json::array();
    for (auto i : t.classes[c]) members.push_back(render(t.universe.enumeration(i)));
    classes.push_back(Json{{"representative", render(t.representative[c])},
                           {"members", members},
                           {"provable_top", static_cast<bool>(t.provable_top[c])}});
  }
  Json le = Json::array();
  for (std::size_t a = 0; a < t.le.size(); ++a)
    for (std::size_t b = 0; b < t.le.size(); ++b)
      if (t.le[a][b]) le.push_back({a, b});
  return Json{{"gamma", formulas_to_json(t.gamma)}, {"universe_size", t.universe.size()}, {"classes", classes}, {"le", le}};
}

}  // namespace iplkit
