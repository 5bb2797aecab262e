#pragma once

#include <string>
#include <vector>

#include "glattice/lattice.hpp"
#include "glattice/limits.hpp"
#include "glattice/linalg.hpp"

namespace glattice {

enum class CohomologyMethod { NormMap, PresentationCocycles, DimensionShift, BarOracle };

std::string method_name(CohomologyMethod m);

struct CohomologyReport {
  GroupPtr group;
  GLattice lattice;
  int degree = 0;
  FinAbGroup value;
  CohomologyMethod method = CohomologyMethod::NormMap;
  /// For degree 1: one entry per invariant-factor generator, each holding the
  /// cocycle value z(s) (a 1 x rank row) for every group generator s.
  std::vector<std::vector<IntMatrix>> witness;
};

/// Linear system for 1-cocycles. Unknowns are the values z(s) on the
/// generators (block j = z(s_j)); z is a cocycle iff z * equations == 0.
/// Without a registered presentation the unknowns are z(x) for every
/// element x and the equations are the cocycle identity on x * s.
struct CocycleSystem {
  IntMatrix equations;
  IntMatrix coboundaries;  // row b: the coboundary of e_b
  std::size_t blocks = 0;  // number of value blocks (generators or elements)
  bool on_generators = true;
};

CocycleSystem cocycle_system(const GLattice& m, const Limits& lim = {});

/// M_1 = coker(M -> Z[G] (x) M) on the basis (x, b) with x != 1. Free, so
/// H^{q+1}(G, M) = H^q(G, M_1) for q >= 1.
GLattice dimension_shift(const GLattice& m, const Limits& lim = {});

/// Tate cohomology for q >= -1 (q >= 2 by shifting).
CohomologyReport tate(const GLattice& m, int q, const Limits& lim = {});
/// Same, with the lattice restricted to a subgroup h of its group first.
CohomologyReport tate(GroupPtr h, const GLattice& m, int q, const Limits& lim = {});

/// H^1(G, Hom(v, w)). Witness values are reshaped to rank_v x rank_w matrices.
CohomologyReport ext1(const GLattice& v, const GLattice& w, const Limits& lim = {});

/// Induced homomorphism on H^q for q in {-1, 0, 1, 2}.
struct InducedMap {
  FinAbGroup source, target;
  /// Row i: coordinates in `target` of the image of source generator i.
  IntMatrix matrix;
  FinAbGroup kernel;
  bool injective = false;
  bool surjective = false;
};

InducedMap induced_map(const LatticeMorphism& f, int q, const Limits& lim = {});

struct ShapiroReport {
  FinAbGroup induced_side;  // H^q(G, Ind M)
  FinAbGroup subgroup_side; // H^q(H, M)
  bool pass = false;
};

/// Compares H^q(G, Ind_H^G M) with H^q(H, M) for a lattice M over h <= g.
ShapiroReport shapiro_check(GroupPtr g, const GLattice& m, int q, const Limits& lim = {});

/// H^q from the inhomogeneous bar complex, q in {1, 2}. Independent of the
/// presentation and shifting code paths.
CohomologyReport bar_oracle(const GLattice& m, int q);

}  // namespace glattice
