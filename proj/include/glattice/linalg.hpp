#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glattice/integer.hpp"
#include "glattice/matrix.hpp"

namespace glattice {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k in
/// invariant-factor form (d_i >= 2, d_i | d_{i+1}). Equal values are
/// isomorphic groups and vice versa.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Normalizes an arbitrary list of cyclic orders (0 = infinite cyclic, 1 = trivial).
  static FinAbGroup from_orders(std::span<const Integer> orders);
  static FinAbGroup cyclic(const Integer& n) { return from_orders(std::vector<Integer>{n}); }
  static FinAbGroup elementary(long p, std::size_t count);

  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  bool is_trivial() const noexcept { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Number of cyclic factors (torsion first, then free).
  std::size_t num_generators() const noexcept { return factors_.size() + free_rank_; }
  /// Order of the i-th generator, 0 for free generators.
  Integer generator_order(std::size_t i) const { return i < factors_.size() ? factors_[i] : Integer(0); }
  /// Order of a finite group; throws for infinite groups.
  Integer order() const;
  /// Exponent of the torsion part (1 for torsion-free).
  Integer exponent() const;
  /// Whether every element is killed by n.
  bool annihilated_by(const Integer& n) const;
  FinAbGroup direct_sum(const FinAbGroup& other) const;

  /// "0", "Z/4", "Z/2 + Z/2", "Z^2 + Z/6".
  std::string str() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<Integer> factors_;
  std::size_t free_rank_ = 0;
};

struct HnfResult {
  IntMatrix h;  ///< row Hermite normal form
  IntMatrix u;  ///< unimodular, u * a == h
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Row-style Hermite normal form with left transform. Pivots are positive,
/// entries above a pivot are reduced into [0, pivot). Pivoting is by smallest
/// nonzero absolute value in a fixed scan order, so output is reproducible.
HnfResult hnf(const IntMatrix& a);

/// Nonzero rows of the HNF of `a`: the canonical basis of its row lattice.
IntMatrix hnf_basis(const IntMatrix& a);

struct SnfResult {
  IntMatrix d, u, v;  ///< u * a * v == d
  std::size_t rank = 0;
  std::vector<Integer> diagonal;  ///< min(rows, cols) entries, divisibility chain, zeros last
};

SnfResult snf(const IntMatrix& a);

/// SNF diagonal only (no transforms).
std::vector<Integer> elementary_divisors(const IntMatrix& a);

/// Basis (rows) of the left kernel {x : x * a == 0}, HNF-normalized.
IntMatrix kernel_basis(const IntMatrix& a);

/// Left kernel of hstack(blocks), computed one block at a time.
IntMatrix kernel_basis_stacked(const std::vector<IntMatrix>& blocks, std::size_t rows);

/// Z^cols / rowspan(a).
FinAbGroup cokernel_structure(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws PreconditionError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Whether the row lattice of `basis` is saturated in Z^cols
/// (equivalently, a direct summand).
bool is_saturated(const IntMatrix& basis);
/// Saturation (Q-span intersected with Z^cols) of the row lattice, HNF basis.
IntMatrix saturation(const IntMatrix& a);

/// Solves x * G == y over Z for a fixed generator matrix G.
class RowSpace {
 public:
  explicit RowSpace(const IntMatrix& generators);

  /// Coefficients x with x * generators == y, or nullopt when y is not in
  /// the row lattice. When the generators are independent the answer is unique.
  std::optional<std::vector<Integer>> solve(std::span<const Integer> y) const;
  bool contains(std::span<const Integer> y) const;
  /// Solves row by row; nullopt if any row is outside the lattice.
  std::optional<IntMatrix> solve_rows(const IntMatrix& ys) const;

  std::size_t rank() const noexcept { return basis_.rows(); }
  /// HNF basis of the row lattice.
  const IntMatrix& basis() const noexcept { return basis_; }

 private:
  std::optional<std::vector<Integer>> solve_hnf(std::span<const Integer> y) const;

  IntMatrix basis_;      // nonzero HNF rows
  IntMatrix transform_;  // rows of U matching basis_
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

/// X * a == b over Z, or nullopt.
std::optional<IntMatrix> solve_left(const IntMatrix& a, const IntMatrix& b);

/// A subquotient Num / Den of Z^n where Den is contained in Num.
///
/// Num is given by a basis (independent rows), Den by generators. The group
/// is presented on the SNF-adapted basis of Num, so elements can be reduced
/// to canonical coordinates on the invariant-factor generators.
class Subquotient {
 public:
  Subquotient(const IntMatrix& numerator_basis, const IntMatrix& denominator_gens);

  const FinAbGroup& group() const noexcept { return group_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }

  /// Coordinates of an element of Num on the invariant-factor generators
  /// (torsion entries reduced into [0, d_i)). Throws if v is not in Num.
  std::vector<Integer> coordinates(std::span<const Integer> v) const;
  /// Ambient representatives of the invariant-factor generators (rows).
  const IntMatrix& generator_lifts() const noexcept { return lifts_; }
  bool contains_numerator(std::span<const Integer> v) const { return num_.contains(v); }

 private:
  RowSpace num_;
  IntMatrix v_;             // SNF right transform on Num coordinates
  std::size_t offset_ = 0;  // first SNF index with d != 1
  std::vector<Integer> orders_;
  IntMatrix lifts_;
  FinAbGroup group_;
  std::size_t ambient_ = 0;
};

}  // namespace glattice
