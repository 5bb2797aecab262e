#pragma once

#include <memory>
#include <string>
#include <vector>

#include "glattice/group.hpp"
#include "glattice/linalg.hpp"
#include "glattice/matrix.hpp"

namespace glattice {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// Hard cap on lattice ranks produced by the constructions below.
constexpr std::size_t kMaxLatticeRank = 10000;

/// A G-lattice Z^rank with G acting through unimodular matrices.
///
/// Row convention: g.v = v * R(g), row i of R(g) holds the coordinates of
/// g.e_i. Consequently R(gh) = R(h) R(g).
class GLattice {
 public:
  GLattice() = default;

  /// Checks unimodularity and that the generator matrices define an action
  /// (relators when a presentation is registered, closure otherwise).
  static GLattice make(GroupPtr g, std::vector<IntMatrix> gen_actions, std::vector<std::string> labels,
                       std::string name);
  /// No checks. For internal constructions whose action is correct by
  /// construction and too large to verify cheaply.
  static GLattice trusted(GroupPtr g, std::vector<IntMatrix> gen_actions, std::vector<std::string> labels,
                          std::string name);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const IntMatrix& gen_action(std::size_t i) const { return gens_.at(i); }
  const std::vector<IntMatrix>& gen_actions() const noexcept { return gens_; }

  /// R(x) for an element index of group().
  IntMatrix action(std::size_t x) const;
  /// R(x) for every element, indexed like group().elements().
  std::vector<IntMatrix> all_actions() const;
  /// Sum of R(x) over the group.
  IntMatrix norm_matrix() const;

  GLattice renamed(std::string name) const;
  /// Throws InternalConsistencyError when the lattice is not a valid G-lattice.
  void verify() const;

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> gens_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Equivariant map between lattices over the same group; x -> x * matrix.
class LatticeMorphism {
 public:
  LatticeMorphism() = default;
  /// Verifies the intertwining identity R_s(g) F = F R_t(g) on generators.
  static LatticeMorphism make(GLattice source, GLattice target, IntMatrix matrix, std::string name);
  static LatticeMorphism trusted(GLattice source, GLattice target, IntMatrix matrix, std::string name);

  const GLattice& source() const noexcept { return source_; }
  const GLattice& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const std::string& name() const noexcept { return name_; }

  bool intertwines() const;
  bool is_injective() const;
  /// Surjective onto the target lattice (SNF diagonal all units, full rank).
  bool is_surjective() const;

 private:
  GLattice source_, target_;
  IntMatrix matrix_;
  std::string name_;
};

/// f then g.
LatticeMorphism compose(const LatticeMorphism& f, const LatticeMorphism& g);
LatticeMorphism identity_morphism(const GLattice& m);
LatticeMorphism zero_morphism(const GLattice& s, const GLattice& t);

bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// ---------------------------------------------------------------- atoms

GLattice trivial_lattice(GroupPtr g);
/// Z_lambda: rank one, generator i acts by signs[i] (each +1 or -1).
GLattice character_lattice(GroupPtr g, const std::vector<int>& signs, std::string name = "");
/// Z with the permutation sign character of the ambient permutation group.
GLattice sign_lattice(GroupPtr g);
/// Z[G] with left multiplication; basis ordered like the elements.
GLattice regular_lattice(GroupPtr g);
/// Z[G/H] on the cosets of coset_action order.
GLattice coset_lattice(GroupPtr g, const FiniteGroup& h);
/// Permutation lattice on the points of the ambient permutation action.
GLattice natural_lattice(GroupPtr g);
/// A_{n-1}: coordinate-sum-zero sublattice of U_n with basis b_i - b_n.
GLattice root_lattice(GroupPtr g);
/// Kernel of Z[G] -> Z[G/H], the left ideal generated by the augmentation ideal of H.
GLattice augmentation_ideal(GroupPtr g, const FiniteGroup& h);
/// Lattice from an explicit permutation action of each generator.
GLattice permutation_lattice(GroupPtr g, const std::vector<Perm>& gen_perms, std::string name);

// ---------------------------------------------------------------- constructions

GLattice direct_sum(const std::vector<GLattice>& parts);
GLattice direct_sum(const GLattice& a, const GLattice& b);
GLattice power(const GLattice& a, std::size_t copies);
/// Kronecker product action, basis e_i (x) f_j in row-major order.
GLattice tensor(const GLattice& a, const GLattice& b);
/// Basis e_i e_j for i <= j, lexicographic.
GLattice sym2(const GLattice& a);
/// Basis e_i ^ e_j for i < j, lexicographic.
GLattice ext2(const GLattice& a);
/// Dual basis; R*(g) = R(g^-1)^T.
GLattice dual(const GLattice& a);
/// Hom(a, b) = dual(a) (x) b. A vector is a rank_a x rank_b matrix X in
/// row-major order and g.X = R_a(g^-1) X R_b(g).
GLattice hom(const GLattice& a, const GLattice& b);
/// Restriction to a subgroup h of a's group.
GLattice restrict_to(const GLattice& a, GroupPtr h);
/// Ind_H^G M for a lattice M over H <= G, basis (coset i, basis a).
GLattice induce(GroupPtr g, const GLattice& m);

/// Saturated kernel of f with the induced action, plus the inclusion.
struct KernelResult {
  GLattice lattice;
  LatticeMorphism inclusion;
};
KernelResult kernel_of(const LatticeMorphism& f);

/// Sublattice spanned by the rows of `basis` (must be G-stable and saturated),
/// with its action and inclusion.
KernelResult sublattice(const GLattice& m, const IntMatrix& basis, std::string name);

/// Quotient by a saturated G-stable sublattice given by spanning rows.
/// Throws PreconditionError listing the torsion when not saturated.
struct QuotientResult {
  GLattice lattice;
  LatticeMorphism projection;
};
QuotientResult quotient_by_saturated(const GLattice& m, const IntMatrix& sub);

/// Cokernel of an injective morphism with torsion-free cokernel.
QuotientResult cokernel_of(const LatticeMorphism& f);

}  // namespace glattice
