#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iplkit/catalog.hpp"
#include "iplkit/json_io.hpp"

namespace py = pybind11;
using namespace iplkit;

namespace {

// Hex keeps very large codes clear of Python's decimal conversion limit.
py::int_ natural_to_py(const Natural& n) {
  return py::int_(py::module_::import("builtins").attr("int")(n.str(0, std::ios_base::hex), 16));
}
Natural natural_from_py(const py::int_& n) {
  if (n < py::int_(0)) throw py::value_error("codes are non-negative");
  return Natural("0x" + py::str(py::module_::import("builtins").attr("format")(n, "x")).cast<std::string>());
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
Json from_py(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

FiniteHeytingAlgebra algebra_arg(const py::object& o) {
  if (py::isinstance<py::str>(o)) {
    auto name = o.cast<std::string>();
    for (const auto& h : algebra_catalog())
      if (h.name() == name) return h;
    throw py::value_error("no catalog algebra named " + name);
  }
  return algebra_from_json(from_py(o));
}

Assignment assignment_arg(const std::map<std::string, Element>& a) {
  Assignment out;
  for (const auto& [name, e] : a) {
    Formula v = parse(name);
    if (!v.is_variable()) throw py::value_error(name + " is not a variable");
    out[v.var()] = e;
  }
  return out;
}

py::object verdict(const ProvabilityVerdict& v) {
  Json out{{"verdict", std::string(kind_name(v.kind))}};
  if (v.witness) out["proof"] = proof_to_json(*v.witness);
  if (v.countermodel) out["countermodel"] = countermodel_to_json(*v.countermodel);
  if (!v.note.empty()) out["note"] = v.note;
  return to_py(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intuitionistic propositional logic: proofs, Kripke models and Heyting algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ProofError>(m, "ProofError", PyExc_ValueError);
  py::register_exception<JsonFormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<OracleInconclusive>(m, "OracleInconclusive", PyExc_RuntimeError);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def_property_readonly("depth", &Formula::depth)
      .def_property_readonly("size", &Formula::size)
      .def("variables", [](const Formula& f) {
        std::vector<std::string> out;
        for (auto v : variables(f)) out.push_back("p" + std::to_string(v.index));
        return out;
      })
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return f.hash(); });

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def("render", [](const Formula& f) { return render(f); }, py::arg("formula"));
  m.def("encode", [](const std::string& text) { return natural_to_py(encode(parse(text))); }, py::arg("formula"));
  m.def("decode", [](const py::int_& code) -> std::optional<std::string> {
    auto f = decode(natural_from_py(code));
    if (!f) return std::nullopt;
    return render(*f);
  }, py::arg("code"));
  m.def("enumerate_formulas", [](std::size_t vars, std::size_t depth) {
    auto u = FormulaUniverse::canonical(vars, depth);
    std::vector<std::string> out;
    for (const auto& f : u.items()) out.push_back(render(f));
    return out;
  }, py::arg("vars"), py::arg("depth"), "Canonical universe, ordered by code.");

  m.def("check_proof", [](const py::object& proof, const std::string& gamma) {
    return render(check(parse_set(gamma), proof_from_json(from_py(proof))));
  }, py::arg("proof"), py::arg("gamma") = "", "Conclusion of a proof given as a JSON-style dict.");
  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  });
  m.def("catalog_proof", [](const std::string& name, const std::vector<std::string>& args) {
    std::vector<Formula> fs;
    for (const auto& a : args) fs.push_back(parse(a));
    auto [gamma, d] = instantiate(catalog_entry(name), fs);
    return py::make_tuple(to_py(formulas_to_json(gamma)), to_py(proof_to_json(d.term)), render(d.conclusion));
  }, py::arg("name"), py::arg("formulas"));
  m.def("deduction_theorem", [](const py::object& proof, const std::string& hyp, const std::string& gamma) {
    return to_py(proof_to_json(deduction_theorem(parse_set(gamma), parse(hyp), proof_from_json(from_py(proof)))));
  }, py::arg("proof"), py::arg("hypothesis"), py::arg("gamma") = "");

  m.def("prove", [](const std::string& formula, const std::string& gamma, std::size_t max_worlds, std::size_t max_steps) {
    return verdict(oracle_provable(parse_set(gamma), parse(formula), OracleBudget{max_worlds, max_steps}));
  }, py::arg("formula"), py::arg("gamma") = "", py::arg("max_worlds") = 3, py::arg("max_steps") = 200000);
  m.def("countermodel", [](const std::string& formula, const std::string& gamma, std::size_t max_worlds) -> py::object {
    auto c = countermodel_search(parse_set(gamma), parse(formula), max_worlds);
    if (!c) return py::none();
    return to_py(countermodel_to_json(*c));
  }, py::arg("formula"), py::arg("gamma") = "", py::arg("max_worlds") = 3);
  m.def("eval", [](const py::object& model, std::size_t world, const std::string& formula) {
    return eval(model_from_json(from_py(model)), world, parse(formula));
  }, py::arg("model"), py::arg("world"), py::arg("formula"));
  m.def("valid_in_model", [](const py::object& model, const std::string& formula) {
    return valid_in_model(model_from_json(from_py(model)), parse(formula));
  }, py::arg("model"), py::arg("formula"));
  m.def("enumerate_models", [](std::size_t vars, std::size_t worlds) {
    py::list out;
    for (const auto& mod : enumerate_models(vars, worlds)) out.append(to_py(model_to_json(mod)));
    return out;
  }, py::arg("vars"), py::arg("worlds"));

  m.def("algebra", [](const py::object& a) { return to_py(algebra_to_json(algebra_arg(a))); }, py::arg("algebra"),
        "Full tables of a catalog algebra (by name) or of an algebra dict.");
  m.def("algebra_names", [] {
    std::vector<std::string> out;
    for (const auto& h : algebra_catalog()) out.push_back(h.name());
    return out;
  });
  m.def("interpret", [](const py::object& a, const std::map<std::string, Element>& i, const std::string& formula) {
    return interpret(algebra_arg(a), assignment_arg(i), parse(formula));
  }, py::arg("algebra"), py::arg("assignment"), py::arg("formula"));
  m.def("valid_in_alg", [](const py::object& a, const std::string& formula) {
    return valid_in_alg(algebra_arg(a), parse(formula));
  }, py::arg("algebra"), py::arg("formula"));
  m.def("filters", [](const py::object& a) {
    py::list out;
    for (auto f : filters(algebra_arg(a))) out.append(to_py(elements_to_json(f)));
    return out;
  }, py::arg("algebra"));
  m.def("prime_filters", [](const py::object& a) {
    py::list out;
    for (auto f : prime_filters(algebra_arg(a))) out.append(to_py(elements_to_json(f)));
    return out;
  }, py::arg("algebra"));
  m.def("super_prime_filter", [](const py::object& a, const std::vector<Element>& f, Element x) {
    auto h = algebra_arg(a);
    ElementSet s = 0;
    for (auto e : f) {
      if (e >= h.size()) throw py::value_error("element out of range");
      s |= ElementSet{1} << e;
    }
    return to_py(elements_to_json(super_prime_filter(h, s, x)));
  }, py::arg("algebra"), py::arg("filter"), py::arg("avoid"));

  m.def("closed_set_algebra", [](const py::object& model) {
    auto mod = model_from_json(from_py(model));
    auto a = closed_set_algebra(mod);
    Json j = algebra_to_json(a.algebra);
    Json carrier = Json::array();
    for (auto s : a.carrier) carrier.push_back(elements_to_json(s));
    j["carrier"] = carrier;
    j["assignment"] = assignment_to_json(closed_assignment(a, mod));
    return to_py(j);
  }, py::arg("model"));
  m.def("prime_filter_frame", [](const py::object& a, const std::map<std::string, Element>& i) {
    return to_py(model_to_json(prime_filter_frame(algebra_arg(a), assignment_arg(i)).model));
  }, py::arg("algebra"), py::arg("assignment"));

  m.def("saturate_pair", [](const std::string& left, const std::string& right, std::size_t vars, std::size_t depth) {
    Oracle oracle(OracleBudget{});
    auto u = FormulaUniverse::canonical(vars, depth);
    auto s = saturate_pair({parse_set(left), parse_set(right)}, u, oracle);
    return to_py(pair_to_json(s.result));
  }, py::arg("left"), py::arg("right"), py::arg("vars"), py::arg("depth"));
  m.def("quotient", [](const std::string& gamma, std::size_t vars, std::size_t depth) {
    Oracle oracle(OracleBudget{});
    auto u = FormulaUniverse::canonical(vars, depth);
    return to_py(quotient_to_json(build_quotient(parse_set(gamma), u, oracle)));
  }, py::arg("gamma"), py::arg("vars"), py::arg("depth"));
}
