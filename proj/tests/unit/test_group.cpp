#include <random>
#include <set>

#include "doctest.h"
#include "glattice/errors.hpp"
#include "glattice/group.hpp"

using namespace glattice;

namespace {

// Brute-force subgroup count: every subset closed under products.
std::size_t count_closed_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
    if (!(m & 1)) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if ((m >> a & 1) && (m >> b & 1) && !(m >> g.mul(a, b) & 1)) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("permutation helpers") {
  Perm p = perm_from_cycles("(1 2)(3 4)", 4);
  CHECK(p == Perm{1, 0, 3, 2});
  CHECK(perm_to_cycles(p) == "(1 2)(3 4)");
  CHECK(perm_to_cycles(perm_identity(3)) == "()");
  // (1 2)(2 3): apply (2 3) first.
  CHECK(perm_from_cycles("(1 2)(2 3)", 3) == perm_compose(perm_from_cycles("(1 2)", 3), perm_from_cycles("(2 3)", 3)));
  CHECK_THROWS_AS(perm_from_cycles("(1 5)", 4), ExpressionError);
  CHECK_THROWS_AS(perm_from_cycles("1 2", 4), ExpressionError);
}

TEST_CASE("symmetric groups") {
  CHECK(symmetric_group(3).order() == 6);
  auto s4 = symmetric_group(4);
  CHECK(s4.order() == 24);
  CHECK(s4.num_generators() == 3);
  CHECK(symmetric_group(5).order() == 120);
  CHECK_THROWS_AS(symmetric_group(9), SizeLimitError);
  CHECK_THROWS_AS(symmetric_group(0), SizeLimitError);
  CHECK(perm_is_identity(s4.element(0)));
  for (std::size_t i = 1; i < s4.order(); ++i) CHECK(s4.element(i - 1) < s4.element(i));
}

TEST_CASE("from_generators") {
  auto v = from_generators(4, {perm_from_cycles("(1 2)(3 4)", 4), perm_from_cycles("(1 3)(2 4)", 4)}, "V");
  CHECK(v.order() == 4);
  CHECK(v.shape().kind == ShapeTag::Kind::Klein4);
  auto p = from_generators(5, {perm_from_cycles("(1 2)", 5), perm_from_cycles("(3 4 5)", 5)}, "S2xC3");
  CHECK(p.order() == 6);
  auto q = from_generators(5, {perm_from_cycles("(1 2)", 5), perm_from_cycles("(3 4 5)", 5), perm_from_cycles("(3 4)", 5)}, "S2xS3");
  CHECK(q.order() == 12);
  auto t = from_generators(3, {}, "1");
  CHECK(t.order() == 1);
  CHECK_THROWS_AS(from_generators(6, {perm_from_cycles("(1 2 3 4 5 6)", 6), perm_from_cycles("(1 2)", 6)}, "S6", 100),
                  SizeLimitError);
}

TEST_CASE("group axioms and words") {
  std::mt19937_64 rng(3);
  for (const auto& g : {symmetric_group(4), klein_four(), cyclic_group(6), direct_product(symmetric_group(3), cyclic_group(2))}) {
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
      CHECK(g.evaluate(g.word(a)) == a);
      if (a) CHECK(g.mul(g.parent(a), g.generators()[g.parent_gen(a)]) == a);
    }
    for (int t = 0; t < 100; ++t) {
      std::size_t a = rng() % n, b = rng() % n, c = rng() % n;
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("subgroups") {
  auto v = klein_four();
  auto sv = subgroups(v);
  CHECK(sv.size() == 5);
  CHECK(sv.size() == count_closed_subsets(v));
  CHECK(sv.front().order() == 1);
  CHECK(sv.back().order() == 4);
  CHECK(subgroups(cyclic_group(2)).size() == 2);
  auto s3 = symmetric_group(3);
  auto ss = subgroups(s3);
  CHECK(ss.size() == 6);
  CHECK(ss.size() == count_closed_subsets(s3));
  for (std::size_t i = 1; i < ss.size(); ++i) CHECK(ss[i - 1].order() <= ss[i].order());
  for (const auto& h : ss) CHECK(is_subgroup(h, s3));
  CHECK(subgroups(symmetric_group(4)).size() == 30);
  CHECK_THROWS_AS(subgroups(symmetric_group(5)), SizeLimitError);
  // Cyclic subgroups of V get a cyclic shape, so they have presentations.
  for (const auto& h : cyclic_subgroups(v)) CHECK(has_presentation(h));
}

TEST_CASE("property: subgroup count does not depend on the generating set") {
  auto a = from_generators(4, {perm_from_cycles("(1 2)", 4), perm_from_cycles("(1 2 3 4)", 4)}, "a");
  auto b = from_generators(4, {perm_from_cycles("(2 3)", 4), perm_from_cycles("(3 4)", 4), perm_from_cycles("(1 2)", 4)}, "b");
  CHECK(a.elements() == b.elements());
  CHECK(subgroups(a).size() == subgroups(b).size());
}

TEST_CASE("conjugacy classes") {
  auto c = conjugacy_classes(symmetric_group(3));
  REQUIRE(c.size() == 3);
  CHECK(c[0].size() == 1);
  std::multiset<std::size_t> sizes;
  for (const auto& k : c) sizes.insert(k.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  CHECK(conjugacy_classes(klein_four()).size() == 4);
  CHECK(conjugacy_classes(symmetric_group(4)).size() == 5);
}

TEST_CASE("presentations") {
  auto c2 = presentation(cyclic_group(2));
  CHECK(c2.num_generators == 1);
  CHECK(c2.relators.size() == 1);
  auto s3 = presentation(symmetric_group(3));
  CHECK(s3.num_generators == 2);
  CHECK(s3.str() == "<g1,g2 | g1 g1, g2 g2, g1 g2 g1 g2 g1 g2>");
  auto v = presentation(klein_four());
  CHECK(v.relators.size() == 3);
  auto p = presentation(direct_product(symmetric_group(3), cyclic_group(2)));
  CHECK(p.num_generators == 3);
  auto g = from_generators(4, {perm_from_cycles("(1 2)", 4), perm_from_cycles("(1 2 3 4)", 4)}, "S4'");
  CHECK_FALSE(has_presentation(g));
  CHECK_THROWS_AS(presentation(g), UnsupportedPresentationError);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto s = symmetric_group(n);
    auto pr = presentation(s);
    for (const auto& r : pr.relators) CHECK(s.evaluate(r) == 0);
  }
  auto y = young_subgroup({2, 2});
  CHECK(y.order() == 4);
  CHECK(has_presentation(y));
}

TEST_CASE("coset actions") {
  auto s3 = symmetric_group(3);
  auto h = stabilizer(s3, 2);
  CHECK(h.order() == 2);
  auto ca = coset_action(s3, h);
  CHECK(ca.degree() == 3);
  auto self = coset_action(s3, s3);
  CHECK(self.degree() == 1);
  auto s4 = symmetric_group(4);
  auto y = young_subgroup({2, 2});
  auto c = coset_action(s4, y);
  CHECK(c.degree() == 6);
  CHECK(c.degree() * y.order() == s4.order());
  CHECK_THROWS_AS(coset_action(s3, from_generators(3, {perm_from_cycles("(1 2 3)", 3)}, "C3").order() ? klein_four() : s3),
                  ContainmentError);
  // The action is a homomorphism into S_degree.
  for (std::size_t a = 0; a < s4.order(); ++a)
    for (std::size_t b = 0; b < s4.order(); b += 5)
      CHECK(c.action_of(s4, s4.mul(a, b)) == perm_compose(c.action_of(s4, a), c.action_of(s4, b)));
}

TEST_CASE("group spec parser") {
  CHECK(parse_group_spec("sym(4)").order() == 24);
  CHECK(parse_group_spec("cyclic(5)").order() == 5);
  CHECK(parse_group_spec("klein4").shape().kind == ShapeTag::Kind::Klein4);
  CHECK(parse_group_spec("gens(4; (1 2)(3 4), (1 3)(2 4))").order() == 4);
  CHECK(parse_group_spec("gens(4; (1 2)(3 4), (1 3)(2 4))").shape().kind == ShapeTag::Kind::Klein4);
  auto p = parse_group_spec("product(sym(3), cyclic(2))");
  CHECK(p.order() == 12);
  CHECK(has_presentation(p));
  CHECK_THROWS_AS(parse_group_spec("foo(3)"), ExpressionError);
  CHECK_THROWS_AS(parse_group_spec("sym(x)"), ExpressionError);
  CHECK_THROWS_AS(parse_group_spec("sym(12)"), SizeLimitError);
}
