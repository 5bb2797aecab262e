#include "glattice/morphisms.hpp"

#include "glattice/errors.hpp"

namespace glattice {

namespace {

// A_{n-1} -> U_n, b_i - b_n.
IntMatrix root_inclusion(std::size_t n) {
  IntMatrix j(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    j(i, i) = 1;
    j(i, n - 1) = -1;
  }
  return j;
}

// Coordinates of b_p - b_q in the basis b_i - b_n of A_{n-1}.
void add_difference(IntMatrix& m, std::size_t row, std::size_t p, std::size_t q, std::size_t n) {
  if (p != n - 1) m(row, p) += 1;
  if (q != n - 1) m(row, q) -= 1;
}

}  // namespace

LatticeMorphism fp_f(GroupPtr g) {
  const std::size_t n = g->degree();
  if (n < 2) throw PreconditionError("fp_f needs degree >= 2");
  GLattice u = natural_lattice(g);
  GLattice src = direct_sum(u, tensor(u, u)).renamed("U" + std::to_string(n) + " (+) U" + std::to_string(n) + "^(x)2");
  GLattice a = root_lattice(g);
  IntMatrix f(n + n * n, n - 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) add_difference(f, n + r * n + s, r, s, n);
  return LatticeMorphism::make(src, a, std::move(f), "f");
}

LatticeMorphism psi(const GLattice& m) {
  const std::size_t r = m.rank();
  GLattice l = ext2(m);
  GLattice t = tensor(m, m);
  IntMatrix f(l.rank(), t.rank());
  std::size_t row = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j, ++row) {
      f(row, i * r + j) = 1;
      f(row, j * r + i) = -1;
    }
  return LatticeMorphism::make(l, t, std::move(f), "psi");
}

LatticeMorphism sym_proj(const GLattice& m) {
  const std::size_t r = m.rank();
  GLattice t = tensor(m, m);
  GLattice s = sym2(m);
  std::vector<std::vector<std::size_t>> idx(r, std::vector<std::size_t>(r));
  std::size_t c = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) idx[i][j] = idx[j][i] = c++;
  IntMatrix f(r * r, s.rank());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) f(i * r + j, idx[i][j]) = 1;
  return LatticeMorphism::make(t, s, std::move(f), "sym");
}

PhiResult phi(GroupPtr g) {
  const std::size_t n = g->degree();
  LatticeMorphism f = fp_f(g);
  KernelResult k = kernel_of(f);
  LatticeMorphism p = psi(root_lattice(g));
  IntMatrix j = root_inclusion(n);
  IntMatrix into_uu = p.matrix() * kron(j, j);
  IntMatrix mid(p.source().rank(), n + n * n);
  mid.set_block(0, n, into_uu);
  LatticeMorphism phi_mid = LatticeMorphism::make(p.source(), f.source(), mid, "phi");
  auto coords = solve_left(k.inclusion.matrix(), mid);
  if (!coords) throw InternalConsistencyError("phi: antisymmetric tensors are not in ker f");
  LatticeMorphism phi_k = LatticeMorphism::make(p.source(), k.lattice, std::move(*coords), "phi");
  return {phi_k, phi_mid, k, f};
}

LatticeMorphism mu(const GLattice& m) {
  GroupPtr g = m.group_ptr();
  GroupPtr one = share(trivial_group(g->degree()));
  GLattice target = induce(g, restrict_to(m, one));
  const std::size_t r = m.rank(), n = g->order();
  auto acts = m.all_actions();
  IntMatrix f(r, n * r);
  for (std::size_t x = 0; x < n; ++x) f.set_block(0, x * r, acts[g->inv(x)]);
  return LatticeMorphism::trusted(m, target, std::move(f), "mu");
}

LatticeMorphism aug(GroupPtr g, const FiniteGroup& h) {
  GLattice src = coset_lattice(g, h);
  IntMatrix e(src.rank(), 1);
  for (std::size_t i = 0; i < src.rank(); ++i) e(i, 0) = 1;
  return LatticeMorphism::make(src, trivial_lattice(g), std::move(e), "eps");
}

LatticeMorphism aug_dual(GroupPtr g, const FiniteGroup& h) {
  GLattice tgt = coset_lattice(g, h);
  IntMatrix e(1, tgt.rank());
  for (std::size_t i = 0; i < tgt.rank(); ++i) e(0, i) = 1;
  return LatticeMorphism::make(trivial_lattice(g), tgt, std::move(e), "eps*");
}

LatticeMorphism aug_natural(GroupPtr g) {
  GLattice src = natural_lattice(g);
  IntMatrix e(src.rank(), 1);
  for (std::size_t i = 0; i < src.rank(); ++i) e(i, 0) = 1;
  return LatticeMorphism::make(src, trivial_lattice(g), std::move(e), "eps");
}

LatticeMorphism aug_dual_natural(GroupPtr g) {
  GLattice tgt = natural_lattice(g);
  IntMatrix e(1, tgt.rank());
  for (std::size_t i = 0; i < tgt.rank(); ++i) e(0, i) = 1;
  return LatticeMorphism::make(trivial_lattice(g), tgt, std::move(e), "eps*");
}

LatticeMorphism crossed_product_map(GroupPtr g, const std::vector<std::size_t>& gens) {
  const std::size_t n = g->degree();
  if (gens.empty()) throw PreconditionError("crossed_product_map: need at least one element");
  for (std::size_t x : gens)
    if (x >= g->order()) throw PreconditionError("crossed_product_map: element index out of range");
  // Transitivity on {1..n}.
  std::vector<bool> seen(n);
  std::vector<std::size_t> stack{n - 1};
  seen[n - 1] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t p = stack.back();
    stack.pop_back();
    for (std::size_t s : g->generators()) {
      std::size_t q = static_cast<std::size_t>(g->element(s)[p]);
      if (!seen[q]) {
        seen[q] = true;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  if (reached != n) throw PreconditionError("crossed_product_map: group is not transitive on 1.." + std::to_string(n));

  const std::size_t order = g->order(), r = gens.size();
  GLattice src = power(regular_lattice(g), r);
  GLattice a = root_lattice(g);
  IntMatrix f(r * order, n - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t x = 0; x < order; ++x) {
      const Perm& px = g->element(x);
      std::size_t p = static_cast<std::size_t>(px[static_cast<std::size_t>(g->element(gens[i])[n - 1])]);
      std::size_t q = static_cast<std::size_t>(px[n - 1]);
      add_difference(f, i * order + x, p, q, n);
    }
  return LatticeMorphism::make(src, a, std::move(f), "crossed_product_f");
}

}  // namespace glattice
