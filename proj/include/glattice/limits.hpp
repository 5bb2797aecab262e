#pragma once

#include <cstddef>
#include <cstdint>

namespace glattice {

/// Size caps and search parameters. Defaults match the documented config keys.
struct Limits {
  std::size_t max_group_order = 100000;
  std::size_t max_lattice_rank = 10000;
  /// Cap on cochain unknowns in a cocycle system (rank x generators).
  std::size_t max_cocycle_unknowns = 20000;
  /// Coefficient bound of the exhaustive phase of the intertwiner search.
  int iso_search_bound = 2;
  std::uint64_t seed = 0;
};

}  // namespace glattice
