#pragma once

#include <vector>

#include "glattice/lattice.hpp"

namespace glattice {

/// U_n (+) U_n(x)U_n -> A_{n-1}: b_i -> 0, b_r (x) b_s -> b_r - b_s.
/// `g` must act on n points.
LatticeMorphism fp_f(GroupPtr g);

/// Lambda^2 M -> M (x) M, e_i ^ e_j -> e_i (x) e_j - e_j (x) e_i.
LatticeMorphism psi(const GLattice& m);

/// M (x) M -> Sym^2 M, e_i (x) e_j -> e_i e_j.
LatticeMorphism sym_proj(const GLattice& m);

/// Lambda^2 A_{n-1} -> ker(fp_f): antisymmetric tensors of A (x) A, which have
/// zero diagonal and therefore lie in the kernel. Returned together with the
/// kernel data it maps into.
struct PhiResult {
  LatticeMorphism phi;         // Lambda^2 A -> K
  LatticeMorphism phi_middle;  // Lambda^2 A -> U (+) U(x)U, equals phi then inclusion
  KernelResult kernel;         // K and K -> U (+) U(x)U
  LatticeMorphism f;           // fp_f
};
PhiResult phi(GroupPtr g);

/// M -> Ind_1^G Res_1 M, m -> sum over g of g (x) g^-1 m (G acts on the first
/// factor only, so the target is free).
LatticeMorphism mu(const GLattice& m);

/// Augmentation Z[G/H] -> Z and its dual Z -> Z[G/H], 1 -> sum of cosets.
LatticeMorphism aug(GroupPtr g, const FiniteGroup& h);
LatticeMorphism aug_dual(GroupPtr g, const FiniteGroup& h);
/// The same maps for the natural permutation lattice U_n.
LatticeMorphism aug_natural(GroupPtr g);
LatticeMorphism aug_dual_natural(GroupPtr g);

/// Z[G]^r -> A_{n-1}, (i, x) -> b_{x g_i(n)} - b_{x(n)} for a transitive
/// G <= S_n and elements g_1..g_r of G (element indices).
LatticeMorphism crossed_product_map(GroupPtr g, const std::vector<std::size_t>& gens);

}  // namespace glattice
