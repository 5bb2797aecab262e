#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "glattice/lattice.hpp"

namespace glattice {

/// Parsed lattice expression. `op` is an atom or combinator name; `params`
/// holds raw text arguments (subgroup specs, signs, integers, morphism text).
///
/// Grammar:
///   expr    := term ("(+)" term)*
///   term    := power ("(x)" power)*
///   power   := primary ("^" INT | "^(x)" INT)*
///   primary := "(" expr ")" | NAME | NAME "(" args ")"
///
/// Atoms: Z, trivial, sign, sign(+,-,...), regular, U(n), A(k), gset(H),
/// aug_ideal(H). Combinators: sym2(e), ext2(e) (alias lambda2), dual(e),
/// hom(e, e), ind(H; e), res(H; e), ker(morphism). `^k` is a direct sum of k
/// copies, `^(x)k` a tensor power.
///
/// Subgroups H: stab(k) (1-based point), young(a,b,...), 1, G, or
/// gens((1 2), (3 4)).
struct LatticeExpr {
  std::string op;
  std::vector<LatticeExpr> args;
  std::vector<std::string> params;

  std::string str() const;
};

LatticeExpr parse_lattice_expr(std::string_view text);

/// Evaluates the expression over g. Throws ExpressionError on malformed or
/// group-incompatible input.
GLattice build(const LatticeExpr& e, const GroupPtr& g);
GLattice build_lattice(std::string_view text, const GroupPtr& g);

/// Morphisms: fp_f(n), psi(expr), phi(n), mu(expr), aug, aug(H), aug_dual,
/// aug_dual(H), lemma52_f(g1, g2, ...) with elements in cycle notation
/// (optionally prefixed by "group;").
LatticeMorphism build_morphism(std::string_view text, const GroupPtr& g);

/// Splits at any of `seps` outside parentheses; pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view s, std::string_view seps);

/// Subgroup of g from a subgroup spec.
GroupPtr parse_subgroup(std::string_view spec, const GroupPtr& g);

}  // namespace glattice
