#include "doctest.h"
#include "glattice/errors.hpp"
#include "glattice/lattice.hpp"
#include "glattice/linalg.hpp"
#include "glattice/morphisms.hpp"

using namespace glattice;

namespace {

Integer trace(const IntMatrix& a) {
  Integer t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// Every element acts compatibly with the product: R(xy) = R(y) R(x).
void check_action(const GLattice& m) {
  const FiniteGroup& g = m.group();
  auto acts = m.all_actions();
  for (std::size_t x = 0; x < g.order(); ++x) {
    CHECK(is_unimodular(acts[x]));
    for (std::size_t y = 0; y < g.order(); ++y) CHECK(acts[g.mul(x, y)] == acts[y] * acts[x]);
  }
  CHECK(acts[0].is_identity());
}

IntMatrix root_inclusion(std::size_t n) {
  IntMatrix j(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    j(i, i) = 1;
    j(i, n - 1) = -1;
  }
  return j;
}

}  // namespace

TEST_CASE("permutation and root lattices") {
  GroupPtr s4 = share(symmetric_group(4));
  GLattice u = natural_lattice(s4);
  GLattice a = root_lattice(s4);
  CHECK(u.rank() == 4);
  CHECK(a.rank() == 3);
  check_action(u);
  check_action(a);
  IntMatrix j = root_inclusion(4);
  for (std::size_t x = 0; x < s4->order(); ++x) {
    IntMatrix r = u.action(x);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(r(i, k) == (static_cast<std::size_t>(s4->element(x)[i]) == k ? 1 : 0));
    CHECK(j * r == a.action(x) * j);
  }
}

TEST_CASE("A2 matrix for the 3-cycle") {
  GroupPtr s3 = share(symmetric_group(3));
  GLattice a = root_lattice(s3);
  std::size_t c = s3->index_of(perm_from_cycles("(1 2 3)", 3));
  CHECK(a.action(c) == IntMatrix{{-1, 1}, {-1, 0}});
  std::size_t t = s3->index_of(perm_from_cycles("(1 2)", 3));
  CHECK(a.action(t) == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("invalid actions are rejected") {
  GroupPtr s3 = share(symmetric_group(3));
  std::vector<IntMatrix> bad(s3->num_generators(), IntMatrix{{2}});
  CHECK_THROWS(GLattice::make(s3, bad, {}, "bad"));
  std::vector<IntMatrix> noact(s3->num_generators(), IntMatrix{{0, 1}, {1, 0}});
  noact[0] = IntMatrix{{1, 1}, {0, 1}};
  CHECK_THROWS(GLattice::make(s3, noact, {}, "bad"));
}

TEST_CASE("symmetric and exterior squares match the character formulas") {
  GroupPtr s4 = share(symmetric_group(4));
  for (const GLattice& m : {root_lattice(s4), natural_lattice(s4), direct_sum(root_lattice(s4), sign_lattice(s4))}) {
    GLattice s = sym2(m), e = ext2(m);
    const std::size_t r = m.rank();
    CHECK(s.rank() == r * (r + 1) / 2);
    CHECK(e.rank() == r * (r - 1) / 2);
    check_action(s);
    check_action(e);
    for (std::size_t x = 0; x < s4->order(); ++x) {
      Integer t1 = trace(m.action(x));
      Integer t2 = trace(m.action(s4->mul(x, x)));
      CHECK(trace(s.action(x)) * 2 == t1 * t1 + t2);
      CHECK(trace(e.action(x)) * 2 == t1 * t1 - t2);
    }
  }
  GLattice a4 = root_lattice(share(symmetric_group(5)));
  CHECK(direct_sum({sym2(a4), natural_lattice(a4.group_ptr()), trivial_lattice(a4.group_ptr())}).rank() == 16);
  CHECK(ext2(a4).rank() == 6);
}

TEST_CASE("dual, hom and tensor") {
  GroupPtr s3 = share(symmetric_group(3));
  GLattice a = root_lattice(s3);
  GLattice d = dual(a);
  GLattice dd = dual(d);
  for (std::size_t i = 0; i < s3->num_generators(); ++i) CHECK(dd.gen_action(i) == a.gen_action(i));
  GLattice h = hom(a, natural_lattice(s3));
  check_action(h);
  // g.X = R_a(g^-1) X R_b(g) on the flattened matrix.
  IntMatrix x = IntMatrix{{1, 2, 0}, {0, -1, 3}};
  for (std::size_t g = 0; g < s3->order(); ++g) {
    IntMatrix expect = a.action(s3->inv(g)) * x * natural_lattice(s3).action(g);
    auto flat = row_times(flatten(x), h.action(g));
    CHECK(reshape(flat, 2, 3) == expect);
  }
  GLattice t = tensor(a, a);
  for (std::size_t g = 0; g < s3->order(); ++g) CHECK(trace(t.action(g)) == trace(a.action(g)) * trace(a.action(g)));
}

TEST_CASE("restriction and induction") {
  GroupPtr s4 = share(symmetric_group(4));
  GroupPtr h = share(stabilizer(*s4, 3));
  GLattice m = restrict_to(sign_lattice(s4), h);
  GLattice ind = induce(s4, m);
  CHECK(ind.rank() == 4);
  check_action(ind);
  // Frobenius: chi_Ind(g) = sum over cosets t with t^-1 g t in H of chi(t^-1 g t).
  CosetAction ca = coset_action(*s4, *h);
  for (std::size_t g = 0; g < s4->order(); ++g) {
    Integer expect = 0;
    for (const auto& coset : ca.cosets) {
      const std::size_t t = coset[0];
      std::size_t c = s4->mul(s4->inv(t), s4->mul(g, t));
      std::size_t hi = h->index_of(s4->element(c));
      if (hi != FiniteGroup::npos) expect += m.action(hi)(0, 0);
    }
    CHECK(trace(ind.action(g)) == expect);
  }
  // Ind of the trivial lattice is the permutation lattice on cosets.
  GLattice perm = induce(s4, trivial_lattice(h));
  for (std::size_t g = 0; g < s4->order(); ++g) CHECK(trace(perm.action(g)) == trace(coset_lattice(s4, *h).action(g)));
}

TEST_CASE("kernels, sublattices and quotients") {
  GroupPtr s3 = share(symmetric_group(3));
  LatticeMorphism eps = aug_natural(s3);
  KernelResult k = kernel_of(eps);
  CHECK(k.lattice.rank() == 2);
  CHECK(k.inclusion.intertwines());
  CHECK((k.inclusion.matrix() * eps.matrix()).is_zero());
  QuotientResult q = cokernel_of(aug_dual_natural(s3));
  CHECK(q.lattice.rank() == 2);
  CHECK(q.projection.is_surjective());
  // 2 * (1,1,1) is not saturated.
  CHECK_THROWS_AS(quotient_by_saturated(natural_lattice(s3), IntMatrix{{2, 2, 2}}), PreconditionError);
  // span of e_1 is not stable.
  CHECK_THROWS_AS(sublattice(natural_lattice(s3), IntMatrix{{1, 0, 0}}, "x"), PreconditionError);
}

TEST_CASE("non-equivariant maps are rejected") {
  GroupPtr s3 = share(symmetric_group(3));
  GLattice u = natural_lattice(s3);
  CHECK_THROWS(LatticeMorphism::make(u, trivial_lattice(s3), IntMatrix{{1}, {0}, {0}}, "bad"));
}

TEST_CASE("fp_f and phi") {
  for (std::size_t n : {3, 4}) {
    GroupPtr g = share(symmetric_group(n));
    LatticeMorphism f = fp_f(g);
    CHECK(f.source().rank() == n + n * n);
    CHECK(f.is_surjective());
    PhiResult p = phi(g);
    CHECK(p.kernel.lattice.rank() == n * n + 1);
    CHECK(p.phi.intertwines());
    CHECK(p.phi.is_injective());
    CHECK(compose(p.phi, p.kernel.inclusion).matrix() == p.phi_middle.matrix());
    CHECK((p.phi_middle.matrix() * f.matrix()).is_zero());
  }
}

TEST_CASE("psi and sym_proj form a short exact sequence") {
  GLattice a = root_lattice(share(symmetric_group(4)));
  LatticeMorphism p = psi(a), s = sym_proj(a);
  CHECK(p.is_injective());
  CHECK(s.is_surjective());
  CHECK((p.matrix() * s.matrix()).is_zero());
  CHECK(kernel_of(s).lattice.rank() == p.source().rank());
  CHECK(is_saturated(p.matrix()));
}

TEST_CASE("mu and the augmentation maps") {
  GroupPtr s3 = share(symmetric_group(3));
  GLattice a = root_lattice(s3);
  LatticeMorphism m = mu(a);
  CHECK(m.intertwines());
  CHECK(m.is_injective());
  CHECK(m.target().rank() == 12);
  GroupPtr v = share(klein_four());
  LatticeMorphism e = aug(v, trivial_group(4));
  CHECK(e.source().rank() == 4);
  CHECK(e.is_surjective());
  CHECK(augmentation_ideal(v, *v).rank() == 3);
  CHECK(augmentation_ideal(v, trivial_group(4)).rank() == 0);
}

TEST_CASE("crossed_product_f") {
  GroupPtr v = share(klein_four());
  LatticeMorphism f = crossed_product_map(v, v->generators());
  CHECK(f.source().rank() == 8);
  CHECK(f.is_surjective());
  CHECK(kernel_of(f).lattice.rank() == 5);
  CHECK_THROWS_AS(crossed_product_map(share(from_generators(4, {perm_from_cycles("(1 2)", 4)}, "C2")), {0}), PreconditionError);
}
