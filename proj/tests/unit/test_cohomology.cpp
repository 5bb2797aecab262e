#include <numeric>

#include "doctest.h"
#include "glattice/cohomology.hpp"
#include "glattice/errors.hpp"
#include "glattice/morphisms.hpp"

using namespace glattice;

namespace {

FinAbGroup ab(std::initializer_list<long> orders) {
  std::vector<Integer> v(orders.begin(), orders.end());
  return FinAbGroup::from_orders(v);
}

GroupPtr grp(const std::string& spec) { return share(parse_group_spec(spec)); }

}  // namespace

TEST_CASE("cyclic groups with trivial coefficients") {
  for (long m : {2, 3, 4, 6}) {
    GLattice z = trivial_lattice(share(cyclic_group(static_cast<std::size_t>(m))));
    CHECK(tate(z, 0).value == ab({m}));
    CHECK(tate(z, -1).value.is_trivial());
    CHECK(tate(z, 1).value.is_trivial());
    CHECK(tate(z, 2).value == ab({m}));
    CHECK(tate(z, 3).value.is_trivial());
  }
}

TEST_CASE("sign character of C2") {
  GroupPtr c2 = share(cyclic_group(2));
  GLattice s = character_lattice(c2, {-1});
  CHECK(tate(s, 0).value.is_trivial());
  CHECK(tate(s, -1).value == ab({2}));
  CHECK(tate(s, 1).value == ab({2}));
  CHECK(tate(s, 2).value.is_trivial());
}

TEST_CASE("Klein four and S3 with trivial coefficients") {
  GLattice zv = trivial_lattice(share(klein_four()));
  CHECK(tate(zv, 0).value == ab({4}));
  CHECK(tate(zv, 1).value.is_trivial());
  CHECK(tate(zv, 2).value == ab({2, 2}));
  CHECK(tate(zv, 3).value == ab({2}));
  CHECK(tate(zv, -1).value.is_trivial());
  GLattice zs = trivial_lattice(share(symmetric_group(3)));
  CHECK(tate(zs, 0).value == ab({6}));
  CHECK(tate(zs, 2).value == ab({2}));
  CHECK(tate(zs, 3).value.is_trivial());
  CHECK(tate(zs, 4).value == ab({6}));
}

TEST_CASE("free and permutation lattices") {
  GroupPtr s3 = share(symmetric_group(3));
  GLattice reg = regular_lattice(s3);
  for (int q = -1; q <= 2; ++q) CHECK(tate(reg, q).value.is_trivial());
  // Shapiro with the point stabilizer S2.
  GLattice u = natural_lattice(s3);
  CHECK(tate(u, 0).value == ab({2}));
  CHECK(tate(u, 1).value.is_trivial());
  CHECK(tate(u, 2).value == ab({2}));
}

TEST_CASE("root lattice H1 is Z/n") {
  for (std::size_t n : {3, 4, 5}) {
    GLattice a = root_lattice(share(symmetric_group(n)));
    CHECK(tate(a, 1).value == ab({static_cast<long>(n)}));
  }
}

TEST_CASE("presentation route agrees with the bar complex") {
  std::vector<GLattice> cases;
  GroupPtr s3 = share(symmetric_group(3));
  GroupPtr v = share(klein_four());
  GroupPtr c4 = share(cyclic_group(4));
  GroupPtr c2c2 = grp("product(cyclic(2),cyclic(2))");
  cases.push_back(root_lattice(s3));
  cases.push_back(sign_lattice(s3));
  cases.push_back(ext2(root_lattice(s3)));
  cases.push_back(dual(natural_lattice(s3)));
  cases.push_back(root_lattice(v));
  cases.push_back(character_lattice(v, {-1, 1}));
  cases.push_back(root_lattice(c4));
  cases.push_back(character_lattice(c4, {-1}));
  cases.push_back(character_lattice(c2c2, {-1, -1}));
  cases.push_back(direct_sum(trivial_lattice(c2c2), character_lattice(c2c2, {1, -1})));
  for (const GLattice& m : cases) {
    INFO(m.name() << " over " << m.group().name());
    CHECK(tate(m, 1).value == bar_oracle(m, 1).value);
    CHECK(tate(m, 2).value == bar_oracle(m, 2).value);
  }
}

TEST_CASE("group without a registered presentation uses all-element cocycles") {
  GroupPtr d4 = grp("gens(4; (1 2 3 4), (1 3))");
  REQUIRE(d4->order() == 8);
  CHECK_FALSE(has_presentation(*d4));
  for (const GLattice& m : {trivial_lattice(d4), root_lattice(d4), sign_lattice(d4)}) {
    CHECK(tate(m, 1).value == bar_oracle(m, 1).value);
    CHECK(tate(m, 2).value == bar_oracle(m, 2).value);
  }
  CHECK(tate(trivial_lattice(d4), 2).value == ab({2, 2}));
}

TEST_CASE("degree 1 witnesses are cocycles representing the generators") {
  GLattice a = root_lattice(share(symmetric_group(4)));
  CohomologyReport r = tate(a, 1);
  REQUIRE(r.witness.size() == 1);
  CocycleSystem sys = cocycle_system(a);
  std::vector<Integer> z;
  for (const auto& val : r.witness[0])
    for (std::size_t j = 0; j < val.cols(); ++j) z.push_back(val(0, j));
  auto img = row_times(z, sys.equations);
  for (const auto& e : img) CHECK(e.is_zero());
}

TEST_CASE("degree below -1 is unsupported") {
  GLattice z = trivial_lattice(share(cyclic_group(2)));
  CHECK_THROWS_AS(tate(z, -2), UnsupportedDegreeError);
}

TEST_CASE("induced maps on trivial coefficients") {
  GroupPtr c6 = share(cyclic_group(6));
  GLattice z = trivial_lattice(c6);
  for (long k : {1, 2, 3, 5, 6}) {
    LatticeMorphism f = LatticeMorphism::make(z, z, IntMatrix{{k}}, "k");
    InducedMap im = induced_map(f, 0);
    CHECK(im.matrix(0, 0) == k % 6);
    long g = std::gcd(k, 6L);
    CHECK(im.kernel == ab({g}));
    CHECK(im.injective == (g == 1));
    CHECK(im.surjective == (g == 1));
    InducedMap im2 = induced_map(f, 2);
    CHECK(im2.kernel == ab({g}));
  }
}

TEST_CASE("augmentation U3 -> Z on H0") {
  GroupPtr s3 = share(symmetric_group(3));
  InducedMap im = induced_map(aug_natural(s3), 0);
  CHECK(im.source == ab({2}));
  CHECK(im.target == ab({6}));
  CHECK(im.injective);
  CHECK_FALSE(im.surjective);
  CHECK(im.matrix(0, 0) == 3);
  // A2 -> U3 -> Z: H1(A2) = Z/3 maps to H1(U3) = 0.
  LatticeMorphism incl = kernel_of(aug_natural(s3)).inclusion;
  InducedMap h1 = induced_map(incl, 1);
  CHECK(h1.source == ab({3}));
  CHECK(h1.target.is_trivial());
  CHECK(h1.kernel == ab({3}));
  CHECK(h1.surjective);
}

TEST_CASE("Shapiro") {
  GroupPtr s4 = share(symmetric_group(4));
  GroupPtr h = share(stabilizer(*s4, 3));
  for (const GLattice& m : {trivial_lattice(h), sign_lattice(h), root_lattice(h)})
    for (int q : {-1, 0, 1, 2}) {
      ShapiroReport r = shapiro_check(s4, m, q);
      CHECK(r.pass);
    }
  GroupPtr v = share(klein_four());
  GroupPtr c2 = share(subgroup_generated(*v, {v->generators()[0]}, "C2"));
  ShapiroReport r = shapiro_check(v, character_lattice(c2, {-1}), 1);
  CHECK(r.pass);
  CHECK(r.induced_side == ab({2}));
}

TEST_CASE("ext1") {
  GroupPtr s4 = share(symmetric_group(4));
  CohomologyReport e = ext1(trivial_lattice(s4), root_lattice(s4));
  CHECK(e.value == ab({4}));
  REQUIRE(e.witness.size() == 1);
  CHECK(e.witness[0][0].rows() == 1);
  CHECK(e.witness[0][0].cols() == 3);
  CHECK(ext1(regular_lattice(share(symmetric_group(3))), trivial_lattice(share(symmetric_group(3)))).value.is_trivial());
}

TEST_CASE("size limits") {
  Limits lim;
  lim.max_cocycle_unknowns = 2;
  CHECK_THROWS_AS(tate(root_lattice(share(symmetric_group(3))), 1, lim), SizeLimitError);
  Limits lim2;
  lim2.max_lattice_rank = 4;
  CHECK_THROWS_AS(tate(root_lattice(share(symmetric_group(3))), 2, lim2), SizeLimitError);
}

TEST_CASE("klein four on A_3") {
  GroupPtr v = share(klein_four());
  GLattice a3 = restrict_to(root_lattice(share(symmetric_group(4))), v);
  CHECK(tate(a3, 1).value == ab({4}));
  CHECK(tate(a3, -1).value == ab({2, 2}));
  CHECK(tate(a3, 0).value.is_trivial());
  for (const auto& h : cyclic_subgroups(*v))
    if (h.order() == 2) CHECK(tate(share(h), a3, 1).value == ab({2}));
}
