#include "doctest.h"
#include "glattice/certificates.hpp"
#include "glattice/errors.hpp"
#include "glattice/morphisms.hpp"

using namespace glattice;

namespace {

GroupPtr sym(std::size_t n) { return share(symmetric_group(n)); }

// Fixed points of each class representative, counted directly on the permutation.
std::vector<Integer> fixed_points(const FiniteGroup& g) {
  std::vector<Integer> out;
  for (const auto& cls : conjugacy_classes(g)) {
    const Perm& p = g.element(cls.front());
    long c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) c += p[i] == i;
    out.emplace_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("faithfulness") {
  GroupPtr s3 = sym(3);
  CHECK(is_faithful(regular_lattice(s3)).faithful);
  CHECK(is_faithful(root_lattice(s3)).faithful);
  FaithfulnessResult t = is_faithful(trivial_lattice(s3));
  CHECK_FALSE(t.faithful);
  REQUIRE(t.witness);
  CHECK(*t.witness != 0);
  FaithfulnessResult s = is_faithful(sign_lattice(s3));
  CHECK_FALSE(s.faithful);
  REQUIRE(s.witness);
  CHECK(s3->element_order(*s.witness) == 3);
}

TEST_CASE("characters of permutation lattices count fixed points") {
  for (std::size_t n : {3, 4, 5}) {
    GroupPtr g = sym(n);
    CHECK(rational_character(natural_lattice(g)).values == fixed_points(*g));
  }
  GroupPtr s4 = sym(4);
  CharacterTable u = rational_character(natural_lattice(s4));
  CharacterTable one = rational_character(trivial_lattice(s4));
  CHECK(rational_character(root_lattice(s4)) == u - one);
  CHECK(rational_character(power(natural_lattice(s4), 3)) == u.scaled(3));
  CHECK(rational_character(direct_sum(natural_lattice(s4), trivial_lattice(s4))) == u + one);
  CHECK(one.str() == "(1,1,1,1,1)");
}

TEST_CASE("equivariant homomorphisms") {
  GroupPtr s4 = sym(4);
  GLattice u = natural_lattice(s4);
  // Orbits of S_4 on pairs of points: the diagonal and the rest.
  CHECK(equivariant_hom_basis(u, u).rows() == 2);
  CHECK(equivariant_hom_basis(regular_lattice(s4), root_lattice(s4)).rows() == 3);
  CHECK(equivariant_hom_basis(trivial_lattice(s4), root_lattice(s4)).rows() == 0);
  IntMatrix b = equivariant_hom_basis(u, root_lattice(s4));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    IntMatrix x = reshape(b.row(i), 4, 3);
    CHECK(LatticeMorphism::make(u, root_lattice(s4), x, "x").intertwines());
  }
}

TEST_CASE("isomorphism search") {
  GroupPtr s3 = sym(3);
  FiniteGroup s2 = stabilizer(*s3, 2);
  IsoSearchResult r = zg_iso_certificate(coset_lattice(s3, s2), natural_lattice(s3));
  CHECK(r.outcome == IsoOutcome::Found);
  REQUIRE(r.certificate);
  CHECK(r.certificate->verify());
  CHECK(is_unimodular(r.certificate->intertwiner));

  CHECK(zg_iso_certificate(root_lattice(s3), natural_lattice(s3)).outcome == IsoOutcome::NotIsomorphic);
  CHECK(zg_iso_certificate(sign_lattice(s3), trivial_lattice(s3)).outcome == IsoOutcome::NotIsomorphic);

  IsoCertificate bad{IntMatrix::identity(3).scaled(Integer(2)), natural_lattice(s3), natural_lattice(s3)};
  CHECK_FALSE(bad.verify());
  IsoCertificate swap{IntMatrix{{0, 1}, {1, 0}}, root_lattice(s3), root_lattice(s3)};
  CHECK_FALSE(swap.verify());
}

TEST_CASE("sign-twisted regular lattice is the regular lattice") {
  GroupPtr c2 = share(cyclic_group(2));
  GLattice twisted = tensor(regular_lattice(c2), character_lattice(c2, {-1}));
  IsoSearchResult r = zg_iso_certificate(twisted, regular_lattice(c2));
  REQUIRE(r.certificate);
  CHECK(r.certificate->verify());
}

TEST_CASE("permutation projective test") {
  GroupPtr s4 = sym(4);
  PermProjectiveReport u = perm_projective_test(natural_lattice(s4));
  CHECK(u.pass);
  CHECK(u.scope == "all subgroups");
  CHECK(u.subgroups_checked == 30);
  PermProjectiveReport a = perm_projective_test(root_lattice(s4));
  CHECK_FALSE(a.pass);
  CHECK_FALSE(a.failures.empty());
  CHECK(perm_projective_test(coset_lattice(s4, young_subgroup({2, 2}))).pass);
  PermProjectiveReport big = perm_projective_test(natural_lattice(sym(5)));
  CHECK(big.pass);
  CHECK(big.scope == "cyclic subgroups");
}

TEST_CASE("generic freeness") {
  GenericFreenessReport fp = generic_freeness(fp_f(sym(4)));
  CHECK(fp.pass);
  CHECK(fp.kernel_rank == 17);

  GroupPtr c6 = share(cyclic_group(6));
  GenericFreenessReport one = generic_freeness(crossed_product_map(c6, {c6->generators()[0]}));
  CHECK(one.surjective);
  CHECK_FALSE(one.kernel_faithful);
  CHECK_FALSE(one.pass);
  CHECK(one.kernel_rank == 1);

  CHECK_THROWS_AS(generic_freeness(aug_natural(sym(3))), PreconditionError);
}
