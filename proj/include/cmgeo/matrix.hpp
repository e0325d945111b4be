#pragma once

#include "cmgeo/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cmgeo {

/// Dense matrix of exact rationals. Row-major, value semantics.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_symmetric() const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant. Rows are scaled to a common integer form, then
/// fraction-free (Bareiss) elimination runs over big integers so every
/// intermediate division is exact and coefficient growth stays polynomial.
Rational exact_determinant(const RationalMatrix& m);

/// Symmetric matrix of squared point-to-point distances. The constructor
/// enforces the class invariants: square, at least one point, zero diagonal,
/// symmetric, non-negative off-diagonal entries.
class SquaredDistanceMatrix {
 public:
  explicit SquaredDistanceMatrix(RationalMatrix entries);

  static SquaredDistanceMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t points() const { return entries_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const RationalMatrix& entries() const { return entries_; }

  /// Restriction to the given point indices, in the given order.
  SquaredDistanceMatrix subset(std::span<const std::size_t> indices) const;

  /// Simultaneous row/column relabeling: point i of the result is point
  /// perm[i] of the input.
  SquaredDistanceMatrix permuted(std::span<const std::size_t> perm) const;

  /// All squared distances multiplied by a positive factor.
  SquaredDistanceMatrix scaled(const Rational& factor) const;

 private:
  RationalMatrix entries_;
};

}  // namespace cmgeo
