#pragma once

#include <string>
#include <vector>

#include "glattice/lattice.hpp"

namespace glattice {

struct CheckStep {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckStep> steps;

  bool pass() const;
  void add(std::string claim, bool ok, std::string detail = "");
  /// One line per step: "[ok] claim (detail)" or "[FAIL] ...".
  std::string str() const;
};

/// Whether the sequence starts with 0 -> and ends with -> 0.
struct Flanks {
  bool left_zero = true;
  bool right_zero = true;
};

/// Exactness of L0 -> L1 -> ... -> Lm: at every inner junction the image
/// equals the kernel (equal HNF bases), plus injectivity / surjectivity at
/// flanked ends. Throws CompositionError when consecutive maps do not compose.
CheckReport check_exact(const std::vector<LatticeMorphism>& seq, Flanks flanks = {});

/// Two short exact rows joined by vertical maps:
///
///   0 -> K  -> M  -> A  -> 0
///        ^     ^     ^
///   0 -> K0 -> M0 -> A0 -> 0
struct Diagram {
  LatticeMorphism top_left, top_right;        // K -> M, M -> A
  LatticeMorphism bottom_left, bottom_right;  // K0 -> M0, M0 -> A0
  LatticeMorphism left, middle, right;        // K0 -> K, M0 -> M, A0 -> A
};

/// Rows exact, both squares commute, left vertical injective, right vertical
/// the identity, K0 faithful. Throws DiagramError on shape mismatch.
CheckReport check_diagram(const Diagram& d);

/// Equality of lattices as objects: same group, rank and generator matrices.
bool same_lattice(const GLattice& a, const GLattice& b);

}  // namespace glattice
