#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glattice/lattice.hpp"
#include "glattice/limits.hpp"
#include "glattice/sequences.hpp"

namespace glattice {

struct Step {
  std::string claim;
  std::string paper_ref;  // short label of the claim being checked
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Step> steps;
  double wall_time_s = 0;

  bool pass() const;
  void add(std::string claim, std::string ref, std::string computed, std::string expected, bool ok);
  /// Adds a step whose computed and expected values are compared as strings.
  void expect_eq(std::string claim, std::string ref, const std::string& computed, const std::string& expected);
  std::string to_json(int indent = 2) const;
  std::string render() const;
};

enum class BoundKind { Upper, Lower, Exact };

struct BoundEntry {
  std::string label;
  long value = 0;
  BoundKind kind = BoundKind::Upper;
  /// Holds only for crossed products of the given degree.
  bool conditional = false;
  std::string note;
};

struct BoundReport {
  long n = 0;
  std::vector<BoundEntry> bounds;
  long best_lower = 0;
  long best_upper = 0;

  const BoundEntry* find(const std::string& label) const;
  /// Every lower (or exact) value is at most every upper (or exact) value.
  bool consistent() const;
  std::string to_json(int indent = 2) const;
  std::string render() const;
};

/// Size caps loaded from a JSON config with keys max_group_order,
/// max_lattice_rank, max_cocycle_unknowns, iso_search_bound, seed.
Limits load_config(const std::string& path);

/// Exact sequence 0 -> K -> U (+) U(x)U -> A -> 0 for S_n, 3 <= n <= 7.
RunReport run_formanek_procesi(int n, const Limits& lim = {});

/// Unimodular K -> U (+) U (+) A(x)A, searched blockwise along
/// K = U (+) <y_ii> (+) ker(f on off-diagonal tensors).
struct KernelCertificate {
  IntMatrix intertwiner;
  GLattice source, target;
  bool verified = false;
  std::string method;
};
std::optional<KernelCertificate> fp_kernel_certificate(const GroupPtr& g, const Limits& lim = {});

/// Sym^2 A (+) U (+) Z against Z[S_n/(S_{n-2} x S_2)] (+) U (+) Z, n in {3, 5}.
RunReport run_stable_permutation(int n, const Limits& lim = {});

/// Ext^1 vanishing and the restriction injectivity for n in {4, 5}.
RunReport run_ext_vanishing(int n, const Limits& lim = {});

/// Lifts the extension class of the exact sequence through Lambda^2 A and
/// builds the two-row diagram over the lifted extension L.
struct SymSquareRealization {
  RunReport report;
  std::optional<Diagram> diagram;
  std::optional<GLattice> extension;
};
SymSquareRealization realize_sym_square_diagram(int n, const Limits& lim = {});
RunReport run_sym_square_diagram(int n, const Limits& lim = {});

/// Cohomology values for the Klein four group acting on A_3 and related lattices.
RunReport run_degree_four(const Limits& lim = {});

struct CrossedBoundResult {
  RunReport report;
  BoundReport bound;
};
/// Z[G]^r -> A_{n-1} for a transitive G <= S_n; `gens` are elements in cycle
/// notation separated by ';' or ','.
CrossedBoundResult run_crossed_bound(const std::string& group_spec, int degree, const std::string& gens,
                                     const Limits& lim = {});

/// Bounds for 2 <= n <= 100.
BoundReport bounds_for(long n);
std::vector<BoundReport> bounds_table(long n_max);
std::string bounds_table_json(const std::vector<BoundReport>& t, int indent = 2);

}  // namespace glattice
