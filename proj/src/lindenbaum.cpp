#include "iplkit/lindenbaum.hpp"

#include <map>
#include <tuple>

namespace iplkit {

namespace {

EquivVerdict from_oracle(const ProvabilityVerdict& v) {
  EquivVerdict out;
  if (v.provable()) {
    out.truth = Truth::Holds;
    out.proof = v.witness;
  } else if (v.refuted()) {
    out.truth = Truth::Fails;
    out.countermodel = v.countermodel;
  } else {
    out.note = v.note;
  }
  return out;
}

}  // namespace

EquivVerdict class_le(const FormulaSet& gamma, const Formula& phi, const Formula& psi, const Oracle& oracle) {
  return from_oracle(oracle.provable(gamma, Formula::implies(phi, psi)));
}

EquivVerdict equiv(const FormulaSet& gamma, const Formula& phi, const Formula& psi, const Oracle& oracle) {
  const Formula there = Formula::implies(phi, psi);
  const Formula back = Formula::implies(psi, phi);
  auto l = oracle.provable(gamma, there);
  if (l.refuted()) return from_oracle(l);
  auto r = oracle.provable(gamma, back);
  if (r.refuted()) return from_oracle(r);
  if (l.provable() && r.provable()) {
    EquivVerdict out;
    out.truth = Truth::Holds;
    out.proof = derive::iff_intro({*l.witness, there}, {*r.witness, back}).term;
    return out;
  }
  EquivVerdict out;
  out.note = l.unknown() ? l.note : r.note;
  return out;
}

QuotientTable build_quotient(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle) {
  QuotientTable t{gamma, u, {}, std::vector<std::size_t>(u.size()), {}, {}, {}};
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula& f = u.enumeration(i);
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < t.classes.size() && !found; ++c) {
      auto v = equiv(gamma, u.enumeration(t.classes[c].front()), f, oracle);
      if (v.truth == Truth::Unknown)
        throw OracleInconclusive("equivalence of " + render(u.enumeration(t.classes[c].front())) + " and " +
                                 render(f) + ": " + v.note);
      if (v.truth == Truth::Holds) found = c;
    }
    if (!found) {
      found = t.classes.size();
      t.classes.emplace_back();
    }
    t.classes[*found].push_back(i);
    t.class_of[i] = *found;
  }
  for (const auto& members : t.classes) {
    std::size_t best = members.front();
    Natural best_code = encode(u.enumeration(best));
    for (auto m : members) {
      Natural c = encode(u.enumeration(m));
      if (c < best_code) {
        best = m;
        best_code = c;
      }
    }
    const Formula& rep = u.enumeration(best);
    t.representative.push_back(rep);
    auto v = oracle.provable(gamma, rep);
    if (v.unknown()) throw OracleInconclusive("provability of " + render(rep) + ": " + v.note);
    t.provable_top.push_back(v.provable());
  }
  const std::size_t k = t.classes.size();
  t.le.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto v = class_le(gamma, t.representative[a], t.representative[b], oracle);
      if (v.truth == Truth::Unknown)
        throw OracleInconclusive("order of " + render(t.representative[a]) + " and " + render(t.representative[b]));
      t.le[a][b] = v.truth == Truth::Holds;
    }
  return t;
}

std::size_t h_quot(const QuotientTable& t, const Formula& f) {
  auto i = t.universe.code(f);
  if (!i) throw OutOfUniverse(f);
  return t.class_of[*i];
}

bool quotient_op_check(const QuotientTable& t) {
  std::map<std::tuple<Connective, std::size_t, std::size_t>, std::size_t> seen;
  const auto& items = t.universe.items();
  for (const auto& a : items)
    for (const auto& b : items)
      for (auto op : {Connective::And, Connective::Or, Connective::Implies}) {
        auto i = t.universe.code(Formula::binary(op, a, b));
        if (!i) continue;
        auto key = std::make_tuple(op, h_quot(t, a), h_quot(t, b));
        auto [it, fresh] = seen.emplace(key, t.class_of[*i]);
        if (!fresh && it->second != t.class_of[*i]) return false;
      }
  return true;
}

bool quotient_op_check(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle) {
  return quotient_op_check(build_quotient(gamma, u, oracle));
}

bool h_quot_compositional(const QuotientTable& t) {
  for (const auto& f : t.universe.items()) {
    if (!f.is_binary() || !t.universe.contains(f.lhs()) || !t.universe.contains(f.rhs())) continue;
    Formula image = Formula::binary(f.kind(), t.representative[h_quot(t, f.lhs())],
                                    t.representative[h_quot(t, f.rhs())]);
    if (!t.universe.contains(image)) continue;
    if (h_quot(t, image) != h_quot(t, f)) return false;
  }
  return true;
}

bool true_in_lt_check(const QuotientTable& t, const Oracle& oracle) {
  for (const auto& g : t.gamma)
    if (!t.provable_top[h_quot(t, g)]) return false;
  for (const auto& f : t.universe.items()) {
    auto v = oracle.provable(t.gamma, f);
    if (v.unknown()) throw OracleInconclusive("provability of " + render(f) + ": " + v.note);
    if (t.provable_top[h_quot(t, f)] != v.provable()) return false;
  }
  return true;
}

bool true_in_lt_check(const FormulaSet& gamma, const FormulaUniverse& u, const Oracle& oracle) {
  return true_in_lt_check(build_quotient(gamma, u, oracle), oracle);
}

}  // namespace iplkit
