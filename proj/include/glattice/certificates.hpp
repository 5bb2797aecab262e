#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glattice/cohomology.hpp"
#include "glattice/lattice.hpp"
#include "glattice/limits.hpp"

namespace glattice {

struct FaithfulnessResult {
  bool faithful = false;
  /// A nonidentity element acting as the identity, when one exists.
  std::optional<std::size_t> witness;
};

FaithfulnessResult is_faithful(const GLattice& m);

/// Traces of the action on conjugacy class representatives, in
/// conjugacy_classes order.
struct CharacterTable {
  std::vector<std::size_t> class_representatives;
  std::vector<std::size_t> class_sizes;
  std::vector<Integer> values;

  bool operator==(const CharacterTable& o) const { return values == o.values; }
  CharacterTable operator+(const CharacterTable& o) const;
  CharacterTable operator-(const CharacterTable& o) const;
  CharacterTable scaled(long k) const;
  /// "(3,1,0)"
  std::string str() const;
};

CharacterTable rational_character(const GLattice& m);

/// Unimodular X with R_a(g) X = X R_b(g) for all g.
struct IsoCertificate {
  IntMatrix intertwiner;
  GLattice source, target;

  bool verify() const;
};

enum class IsoOutcome { Found, NotFound, NotIsomorphic };

struct IsoSearchOptions {
  int bound = 2;
  std::size_t random_trials = 500;
  int random_range = 5;
  std::uint64_t seed = 0;
};

struct IsoSearchResult {
  IsoOutcome outcome = IsoOutcome::NotFound;
  std::optional<IsoCertificate> certificate;
  std::string reason;
  std::size_t hom_dimension = 0;
  std::size_t candidates_tried = 0;
};

/// Z-basis of Hom_G(a, b); row i is a flattened rank_a x rank_b intertwiner.
IntMatrix equivariant_hom_basis(const GLattice& a, const GLattice& b);

/// Looks for a unimodular intertwiner a -> b. NotFound is inconclusive;
/// NotIsomorphic is only returned on a rank or character mismatch.
IsoSearchResult zg_iso_certificate(const GLattice& a, const GLattice& b, const IsoSearchOptions& opt = {});

struct PermProjectiveFailure {
  std::string subgroup;
  int degree = 0;
  FinAbGroup value;
};

struct PermProjectiveReport {
  bool pass = false;
  std::string label = "cohomological criterion";
  std::string scope;  // "all subgroups" or "cyclic subgroups"
  std::size_t subgroups_checked = 0;
  std::vector<PermProjectiveFailure> failures;
};

/// H^1(H, m) = 0 = H^-1(H, m) for every subgroup H (every cyclic subgroup when
/// the group is larger than 48).
PermProjectiveReport perm_projective_test(const GLattice& m, const Limits& lim = {});

struct GenericFreenessReport {
  bool surjective = false;
  bool kernel_faithful = false;
  bool pass = false;
  std::size_t kernel_rank = 0;
  std::optional<std::size_t> non_faithful_witness;
};

/// f must map onto the root lattice A_{n-1} of its group.
GenericFreenessReport generic_freeness(const LatticeMorphism& f);

}  // namespace glattice
