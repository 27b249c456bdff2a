#include "iplkit/formula.hpp"

#include <algorithm>
#include <cctype>

namespace iplkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Variable;
  n->var = v;
  n->hash = mix(1, std::hash<std::uint64_t>{}(v.index));
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  static const Formula bot = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::Bottom;
    n->hash = 2;
    return Formula(std::move(n));
  }();
  return bot;
}

Formula Formula::binary(Connective c, Formula lhs, Formula rhs) {
  if (c != Connective::And && c != Connective::Or && c != Connective::Implies)
    throw std::invalid_argument("Formula::binary: not a binary connective");
  auto n = std::make_shared<Node>();
  n->kind = c;
  n->depth = 1 + std::max(lhs.depth(), rhs.depth());
  n->size = 1 + lhs.size() + rhs.size();
  n->hash = mix(mix(static_cast<std::size_t>(c) * 31, lhs.hash()), rhs.hash());
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return binary(Connective::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return binary(Connective::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implies(Formula lhs, Formula rhs) {
  return binary(Connective::Implies, std::move(lhs), std::move(rhs));
}

Var Formula::var() const {
  if (!is_variable()) throw std::logic_error("Formula::var on a non-variable");
  return node_->var;
}

const Formula& Formula::lhs() const {
  if (!is_binary()) throw std::logic_error("Formula::lhs on an atom");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!is_binary()) throw std::logic_error("Formula::rhs on an atom");
  return *node_->rhs;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::Variable: return a.node_->var == b.node_->var;
    case Connective::Bottom: return true;
    default: return *a.node_->lhs == *b.node_->lhs && *a.node_->rhs == *b.node_->rhs;
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::Variable: return a.node_->var <=> b.node_->var;
    case Connective::Bottom: return std::strong_ordering::equal;
    default:
      if (auto c = *a.node_->lhs <=> *b.node_->lhs; c != 0) return c;
      return *a.node_->rhs <=> *b.node_->rhs;
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected token");
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t end = pos_ + kw.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept("<->")) return Formula::iff(lhs, parse_iff());
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_disj();
    if (accept("->")) return Formula::implies(lhs, parse_imp());
    return lhs;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (accept("|")) f = Formula::disj(f, parse_conj());
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_neg();
    while (accept("&")) f = Formula::conj(f, parse_neg());
    return f;
  }

  Formula parse_neg() {
    if (accept("~")) return Formula::neg(parse_neg());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Formula f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (keyword("bot")) return Formula::bottom();
    if (keyword("top")) return Formula::top();
    if (text_[pos_] == 'p') {
      std::size_t start = pos_ + 1, end = start;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == start) fail("expected variable index after 'p'");
      if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) fail("unknown token");
      std::uint64_t idx = 0;
      for (std::size_t i = start; i < end; ++i) {
        std::uint64_t d = static_cast<std::uint64_t>(text_[i] - '0');
        if (idx > (UINT64_MAX - d) / 10) fail("variable index out of range");
        idx = idx * 10 + d;
      }
      pos_ = end;
      return Formula::variable(idx);
    }
    fail("unknown token");
  }
};

int precedence(Connective c) {
  switch (c) {
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 4;
  }
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Variable:
      out += 'p';
      out += std::to_string(f.var().index);
      return;
    case Connective::Bottom:
      out += "bot";
      return;
    default: break;
  }
  const int prec = precedence(f.kind());
  const bool right_assoc = f.is(Connective::Implies);
  const int lp = precedence(f.lhs().kind()), rp = precedence(f.rhs().kind());
  const bool paren_l = right_assoc ? lp <= prec : lp < prec;
  const bool paren_r = right_assoc ? rp < prec : rp <= prec;

  auto side = [&out](const Formula& g, bool paren) {
    if (paren) out += '(';
    render_into(g, out);
    if (paren) out += ')';
  };
  side(f.lhs(), paren_l);
  switch (f.kind()) {
    case Connective::And: out += " & "; break;
    case Connective::Or: out += " | "; break;
    default: out += " -> "; break;
  }
  side(f.rhs(), paren_r);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

FormulaSet parse_set(std::string_view text) {
  auto blank = [](std::string_view v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  };
  FormulaSet out;
  if (blank(text)) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view piece = text.substr(start, comma - start);
    if (blank(piece)) throw ParseError("empty formula in list", start);
    try {
      out.insert(parse(piece));
    } catch (const ParseError& e) {
      throw ParseError("bad formula in list", start + e.offset());
    }
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return out;
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render(const FormulaSet& s) {
  std::string out;
  for (const auto& f : s) {
    if (!out.empty()) out += ", ";
    out += render(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Codes

Natural pairing(const Natural& x, const Natural& y) {
  Natural s = x + y;
  return s * (s + 1) + 2 * x;
}

std::optional<std::pair<Natural, Natural>> unpair(const Natural& n) {
  if (n < 0) return std::nullopt;
  // s = largest value with s(s+1) <= n, i.e. (2s+1)^2 <= 4n+1.
  Natural root = boost::multiprecision::sqrt(Natural(4 * n + 1));
  Natural s = (root - 1) / 2;
  while (s * (s + 1) > n) --s;
  while ((s + 1) * (s + 2) <= n) ++s;
  Natural r = n - s * (s + 1);
  if (r % 2 != 0) return std::nullopt;
  Natural x = r / 2;
  if (x > s) return std::nullopt;
  return std::pair<Natural, Natural>{x, s - x};
}

Natural encode(const Formula& f) {
  switch (f.kind()) {
    case Connective::Variable: return pairing(0, Natural(f.var().index) + 1);
    case Connective::Bottom: return 0;
    case Connective::And: return pairing(pairing(encode(f.lhs()), 1), encode(f.rhs()));
    case Connective::Or: return pairing(pairing(encode(f.lhs()), 2), encode(f.rhs()));
    case Connective::Implies: return pairing(pairing(encode(f.lhs()), 3), encode(f.rhs()));
  }
  return 0;
}

std::optional<Formula> decode(const Natural& n) {
  if (n == 0) return Formula::bottom();
  auto outer = unpair(n);
  if (!outer) return std::nullopt;
  const auto& [head, rest] = *outer;
  if (head == 0) {
    // rest >= 1 here since pairing(0, 0) == 0 was handled above.
    Natural idx = rest - 1;
    if (idx > Natural(UINT64_MAX)) return std::nullopt;
    return Formula::variable(static_cast<std::uint64_t>(idx));
  }
  auto inner = unpair(head);
  if (!inner) return std::nullopt;
  const auto& [lcode, tag] = *inner;
  Connective c;
  if (tag == 1) c = Connective::And;
  else if (tag == 2) c = Connective::Or;
  else if (tag == 3) c = Connective::Implies;
  else return std::nullopt;
  auto l = decode(lcode);
  if (!l) return std::nullopt;
  auto r = decode(rest);
  if (!r) return std::nullopt;
  return Formula::binary(c, *l, *r);
}

// ---------------------------------------------------------------------------

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!out.insert(g).second) continue;
    if (g.is_binary()) {
      stack.push_back(g.lhs());
      stack.push_back(g.rhs());
    }
  }
  return out;
}

VarSet variables(const Formula& f) {
  VarSet out;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->is_variable()) out.insert(g->var());
    else if (g->is_binary()) {
      stack.push_back(&g->lhs());
      stack.push_back(&g->rhs());
    }
  }
  return out;
}

VarSet variables(const FormulaSet& s) {
  VarSet out;
  for (const auto& f : s) out.merge(variables(f));
  return out;
}

std::vector<Formula> enumerate_formulas(std::size_t num_vars, std::size_t max_depth) {
  // by_depth[d] holds exactly the formulas of depth d.
  std::vector<std::vector<Formula>> by_depth(1);
  by_depth[0].push_back(Formula::bottom());
  for (std::size_t v = 0; v < num_vars; ++v) by_depth[0].push_back(Formula::variable(v));

  std::vector<Formula> upto(by_depth[0]);
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<Formula> level;
    for (Connective c : {Connective::And, Connective::Or, Connective::Implies}) {
      // At least one operand has depth d-1.
      for (const auto& l : upto)
        for (const auto& r : upto)
          if (l.depth() == d - 1 || r.depth() == d - 1) level.push_back(Formula::binary(c, l, r));
    }
    upto.insert(upto.end(), level.begin(), level.end());
    by_depth.push_back(std::move(level));
  }
  return upto;
}

Formula fold_conj(const std::vector<Formula>& items, const Formula& seed) {
  Formula acc = seed;
  for (auto it = items.rbegin(); it != items.rend(); ++it) acc = Formula::conj(*it, acc);
  return acc;
}

Formula fold_disj(const std::vector<Formula>& items, const Formula& seed) {
  Formula acc = seed;
  for (auto it = items.rbegin(); it != items.rend(); ++it) acc = Formula::disj(*it, acc);
  return acc;
}

}  // namespace iplkit
