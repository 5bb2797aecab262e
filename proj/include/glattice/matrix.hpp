#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "glattice/integer.hpp"

namespace glattice {

/// Dense integer matrix, row-major.
///
/// Vectors are rows and act on the left (`v * A`), so a matrix with r rows
/// and c columns is a homomorphism Z^r -> Z^c.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
  static IntMatrix row_vector(std::span<const Integer> v);
  static IntMatrix diagonal(std::span<const Integer> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Integer> row_copy(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }

  const std::vector<Integer>& data() const noexcept { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> idx) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  IntMatrix operator-() const;
  IntMatrix scaled(const Integer& s) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// v * A for a row vector v.
std::vector<Integer> row_times(std::span<const Integer> v, const IntMatrix& a);

IntMatrix hstack(const std::vector<IntMatrix>& blocks, std::size_t rows);
IntMatrix vstack(const std::vector<IntMatrix>& blocks, std::size_t cols);
IntMatrix block_diag(const std::vector<IntMatrix>& blocks);
/// Kronecker product; with row vectors this is the action on a tensor product.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
/// Copies of `a` on the diagonal.
IntMatrix repeat_diag(const IntMatrix& a, std::size_t copies);

/// Row-major flattening of an r x c matrix into a 1 x (r*c) row.
std::vector<Integer> flatten(const IntMatrix& a);
IntMatrix reshape(std::span<const Integer> v, std::size_t rows, std::size_t cols);

}  // namespace glattice
