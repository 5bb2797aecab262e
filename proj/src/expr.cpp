#include "glattice/expr.hpp"

#include <cctype>

#include "glattice/errors.hpp"
#include "glattice/morphisms.hpp"

namespace glattice {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits at separators that are not nested inside parentheses.
std::vector<std::string> split_top(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '<') ++depth;
    if (c == ')' || c == '>') --depth;
    if (depth < 0) throw ExpressionError("unbalanced parentheses in '" + std::string(s) + "'");
    if (depth == 0 && seps.find(c) != std::string_view::npos) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ExpressionError("unbalanced parentheses in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

long parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ExpressionError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  LatticeExpr parse_all() {
    LatticeExpr e = parse_expr();
    skip();
    if (p_ != t_.size()) fail("unexpected trailing text");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExpressionError(msg + " at position " + std::to_string(p_) + " in '" + std::string(t_) + "'");
  }
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool at(std::string_view s) {
    skip();
    return t_.substr(p_, s.size()) == s;
  }
  bool eat(std::string_view s) {
    if (!at(s)) return false;
    p_ += s.size();
    return true;
  }

  LatticeExpr parse_expr() {
    LatticeExpr first = parse_term();
    if (!at("(+)")) return first;
    LatticeExpr e{"(+)", {std::move(first)}, {}};
    while (eat("(+)")) e.args.push_back(parse_term());
    return e;
  }

  LatticeExpr parse_term() {
    LatticeExpr first = parse_power();
    if (!at("(x)")) return first;
    LatticeExpr e{"(x)", {std::move(first)}, {}};
    while (eat("(x)")) e.args.push_back(parse_power());
    return e;
  }

  LatticeExpr parse_power() {
    LatticeExpr e = parse_primary();
    while (eat("^")) {
      std::string op = eat("(x)") ? "^(x)" : "^";
      skip();
      std::size_t s = p_;
      while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
      if (s == p_) fail("expected an exponent");
      e = LatticeExpr{op, {std::move(e)}, {std::string(t_.substr(s, p_ - s))}};
    }
    return e;
  }

  std::string raw_group() {
    // at '(' : returns the balanced contents
    std::size_t start = ++p_;
    int depth = 1;
    while (p_ < t_.size() && depth > 0) {
      if (t_[p_] == '(') ++depth;
      if (t_[p_] == ')') --depth;
      ++p_;
    }
    if (depth) fail("unbalanced parentheses");
    return std::string(t_.substr(start, p_ - 1 - start));
  }

  LatticeExpr parse_primary() {
    skip();
    if (at("(+)") || at("(x)")) fail("operator without left operand");
    if (eat("(")) {
      LatticeExpr e = parse_expr();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    std::size_t s = p_;
    while (p_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_')) ++p_;
    if (s == p_) fail("expected a lattice name");
    std::string name(t_.substr(s, p_ - s));
    std::string raw;
    bool call = false;
    if (p_ < t_.size() && t_[p_] == '(') {
      raw = raw_group();
      call = true;
    }
    return make(name, raw, call);
  }

  LatticeExpr make(const std::string& name, const std::string& raw, bool call) {
    auto sub = [](const std::string& text) { return Parser(text).parse_all(); };
    if (name == "Z" || name == "trivial" || name == "regular" || name == "ZG") {
      if (call) fail(name + " takes no arguments");
      return {name == "ZG" ? "regular" : name == "trivial" ? "Z" : name, {}, {}};
    }
    if (name == "sign") return {"sign", {}, call ? split_top(raw, ",") : std::vector<std::string>{}};
    if (name == "U" || name == "A") {
      return {name, {}, call ? std::vector<std::string>{trim(raw)} : std::vector<std::string>{}};
    }
    if (!call) fail("'" + name + "' needs arguments");
    if (name == "sym2" || name == "ext2" || name == "lambda2" || name == "dual")
      return {name == "lambda2" ? "ext2" : name, {sub(raw)}, {}};
    if (name == "hom") {
      auto parts = split_top(raw, ",");
      if (parts.size() != 2) fail("hom needs two arguments");
      return {"hom", {sub(parts[0]), sub(parts[1])}, {}};
    }
    if (name == "ind" || name == "res") {
      auto parts = split_top(raw, ";");
      if (parts.size() != 2) fail(name + " needs 'subgroup; expr'");
      return {name, {sub(parts[1])}, {parts[0]}};
    }
    if (name == "gset" || name == "aug_ideal") return {name, {}, {trim(raw)}};
    if (name == "ker") return {"ker", {}, {trim(raw)}};
    fail("unknown lattice '" + name + "'");
  }

  std::string_view t_;
  std::size_t p_ = 0;
};

void require_same_group(const GLattice& a, const GLattice& b, const std::string& where) {
  if (!same_group(a.group(), b.group()))
    throw ExpressionError("incompatible groups in " + where + ": " + a.group().name() + " vs " + b.group().name());
}

std::size_t element_from_cycles(const std::string& text, const FiniteGroup& g) {
  std::size_t x = g.index_of(perm_from_cycles(text, g.degree()));
  if (x == FiniteGroup::npos) throw ExpressionError("element " + text + " is not in " + g.name());
  return x;
}

}  // namespace

std::string LatticeExpr::str() const {
  if (op == "(+)" || op == "(x)") {
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) {
      bool wrap = op == "(x)" && args[i].op == "(+)";
      if (i) s += " " + op + " ";
      s += wrap ? "(" + args[i].str() + ")" : args[i].str();
    }
    return s;
  }
  if (op == "^" || op == "^(x)") {
    const auto& a = args[0];
    bool wrap = a.op == "(+)" || a.op == "(x)";
    return (wrap ? "(" + a.str() + ")" : a.str()) + op + params[0];
  }
  if (args.empty() && params.empty()) return op;
  std::string s = op + "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? ", " : "") + params[i];
  if (!params.empty() && !args.empty()) s += "; ";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i].str();
  return s + ")";
}

std::vector<std::string> split_top_level(std::string_view s, std::string_view seps) { return split_top(s, seps); }

LatticeExpr parse_lattice_expr(std::string_view text) { return Parser(text).parse_all(); }

GroupPtr parse_subgroup(std::string_view spec_in, const GroupPtr& g) {
  std::string spec = trim(spec_in);
  const std::size_t deg = g->degree();
  if (spec == "1" || spec == "trivial") return share(trivial_group(deg));
  if (spec == "G" || spec == "whole") return g;
  auto args_of = [&](std::string_view prefix) -> std::optional<std::string> {
    if (spec.rfind(prefix, 0) != 0 || spec.back() != ')') return std::nullopt;
    return spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
  };
  FiniteGroup h;
  if (auto a = args_of("stab(")) {
    long k = parse_int(trim(*a), "stab");
    if (k < 1 || static_cast<std::size_t>(k) > deg) throw ExpressionError("stab: point out of range");
    h = stabilizer(*g, static_cast<std::size_t>(k - 1));
  } else if (auto a = args_of("young(")) {
    std::vector<std::size_t> parts;
    std::size_t total = 0;
    for (const auto& p : split_top(*a, ",")) {
      long v = parse_int(p, "young");
      if (v < 1) throw ExpressionError("young: parts must be positive");
      parts.push_back(static_cast<std::size_t>(v));
      total += parts.back();
    }
    if (total != deg) throw ExpressionError("young: parts must sum to the degree " + std::to_string(deg));
    h = young_subgroup(parts);
  } else if (auto a = args_of("gens(")) {
    std::vector<std::size_t> idx;
    for (const auto& c : split_top(*a, ",;"))
      if (!c.empty()) idx.push_back(element_from_cycles(c, *g));
    std::string name = "<";
    for (std::size_t i = 0; i < idx.size(); ++i) name += (i ? "," : "") + perm_to_cycles(g->element(idx[i]));
    h = subgroup_generated(*g, idx, name + ">");
  } else {
    h = parse_group_spec(spec);
    if (h.degree() != deg) throw ExpressionError("subgroup " + spec + " acts on a different number of points");
  }
  if (!is_subgroup(h, *g)) throw ExpressionError(h.name() + " is not a subgroup of " + g->name());
  return share(std::move(h));
}

GLattice build(const LatticeExpr& e, const GroupPtr& g) {
  const std::string& op = e.op;
  const std::string name = e.str();
  if (op == "Z") return trivial_lattice(g);
  if (op == "regular") return regular_lattice(g);
  if (op == "sign") {
    if (e.params.empty()) return sign_lattice(g);
    if (e.params.size() != g->num_generators())
      throw ExpressionError("sign(...) needs one sign per generator of " + g->name());
    std::vector<int> signs;
    for (const auto& s : e.params) {
      if (s == "+" || s == "1" || s == "+1")
        signs.push_back(1);
      else if (s == "-" || s == "-1")
        signs.push_back(-1);
      else
        throw ExpressionError("bad sign '" + s + "'");
    }
    return character_lattice(g, signs, name);
  }
  if (op == "U") {
    if (!e.params.empty() && parse_int(e.params[0], "U") != static_cast<long>(g->degree()))
      throw ExpressionError("U(n) needs n = " + std::to_string(g->degree()));
    return natural_lattice(g);
  }
  if (op == "A") {
    if (!e.params.empty() && parse_int(e.params[0], "A") + 1 != static_cast<long>(g->degree()))
      throw ExpressionError("A(k) needs k = " + std::to_string(g->degree() - 1));
    return root_lattice(g);
  }
  if (op == "gset") return coset_lattice(g, *parse_subgroup(e.params[0], g)).renamed(name);
  if (op == "aug_ideal") return augmentation_ideal(g, *parse_subgroup(e.params[0], g)).renamed(name);
  if (op == "sym2") return sym2(build(e.args[0], g)).renamed(name);
  if (op == "ext2") return ext2(build(e.args[0], g)).renamed(name);
  if (op == "dual") return dual(build(e.args[0], g)).renamed(name);
  if (op == "hom") {
    GLattice a = build(e.args[0], g), b = build(e.args[1], g);
    require_same_group(a, b, name);
    return hom(a, b).renamed(name);
  }
  if (op == "(+)" || op == "(x)") {
    std::vector<GLattice> parts;
    for (const auto& a : e.args) parts.push_back(build(a, g));
    for (std::size_t i = 1; i < parts.size(); ++i) require_same_group(parts[0], parts[i], name);
    if (op == "(+)") return direct_sum(parts).renamed(name);
    GLattice acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = tensor(acc, parts[i]);
    return acc.renamed(name);
  }
  if (op == "^" || op == "^(x)") {
    long k = parse_int(e.params[0], "exponent");
    if (k < 1) throw ExpressionError("exponent must be positive");
    GLattice a = build(e.args[0], g);
    if (op == "^") return power(a, static_cast<std::size_t>(k)).renamed(name);
    GLattice acc = a;
    for (long i = 1; i < k; ++i) acc = tensor(acc, a);
    return acc.renamed(name);
  }
  if (op == "ind") {
    GroupPtr h = parse_subgroup(e.params[0], g);
    return induce(g, build(e.args[0], h)).renamed(name);
  }
  if (op == "res") {
    GroupPtr h = parse_subgroup(e.params[0], g);
    return restrict_to(build(e.args[0], g), h).renamed(name);
  }
  if (op == "ker") return kernel_of(build_morphism(e.params[0], g)).lattice.renamed(name);
  throw ExpressionError("unknown lattice expression '" + op + "'");
}

GLattice build_lattice(std::string_view text, const GroupPtr& g) { return build(parse_lattice_expr(text), g); }

LatticeMorphism build_morphism(std::string_view text_in, const GroupPtr& g) {
  std::string text = trim(text_in);
  std::size_t open = text.find('(');
  std::string name = trim(text.substr(0, open));
  std::string raw;
  if (open != std::string::npos) {
    if (text.back() != ')') throw ExpressionError("malformed morphism '" + text + "'");
    raw = text.substr(open + 1, text.size() - open - 2);
  }
  auto need_degree = [&](const char* what) {
    if (raw.empty()) return;
    if (parse_int(trim(raw), what) != static_cast<long>(g->degree()))
      throw ExpressionError(std::string(what) + "(n) needs n = " + std::to_string(g->degree()));
  };
  if (name == "fp_f") {
    need_degree("fp_f");
    return fp_f(g);
  }
  if (name == "phi") {
    need_degree("phi");
    return phi(g).phi;
  }
  if (name == "psi") return psi(build_lattice(raw, g));
  if (name == "mu") return mu(build_lattice(raw, g));
  if (name == "aug") return raw.empty() ? aug_natural(g) : aug(g, *parse_subgroup(raw, g));
  if (name == "aug_dual") return raw.empty() ? aug_dual_natural(g) : aug_dual(g, *parse_subgroup(raw, g));
  if (name == "lemma52_f") {
    auto segs = split_top(raw, ";");
    std::size_t first = 0;
    if (segs.size() >= 2 && !segs[0].empty() && segs[0][0] != '(') {
      FiniteGroup named = parse_group_spec(segs[0]);
      if (named.order() != g->order() || !is_subgroup(named, *g))
        throw ExpressionError("lemma52_f: group " + segs[0] + " differs from the acting group");
      first = 1;
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = first; i < segs.size(); ++i)
      for (const auto& c : split_top(segs[i], ","))
        if (!c.empty()) idx.push_back(element_from_cycles(c, *g));
    return crossed_product_map(g, idx);
  }
  throw ExpressionError("unknown morphism '" + name + "'");
}

}  // namespace glattice
