#include "cmgeo/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cmgeo {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  RationalMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Rational exact_determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row; det(M) = det(Z) / prod(row multipliers).
  std::vector<BigInt> z(n * n);
  BigInt row_factor_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt mult = 1;
    for (std::size_t j = 0; j < n; ++j) mult = lcm(mult, denominator(m(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = m(i, j) * mult;
      z[i * n + j] = numerator(scaled);
    }
    row_factor_product *= mult;
  }

  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return z[i * n + j]; };

  int det_sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot_row = k;
      while (pivot_row < n && at(pivot_row, k) == 0) ++pivot_row;
      if (pivot_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
      det_sign = -det_sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }

  Rational det(at(n - 1, n - 1), row_factor_product);
  return det_sign > 0 ? det : -det;
}

SquaredDistanceMatrix::SquaredDistanceMatrix(RationalMatrix entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("squared-distance matrix must be square");
  }
  if (entries_.rows() == 0) {
    throw std::invalid_argument("squared-distance matrix needs at least one point");
  }
  const std::size_t k = entries_.rows();
  for (std::size_t i = 0; i < k; ++i) {
    if (entries_(i, i) != 0) {
      throw std::invalid_argument(entry_name(i, i) + " must be 0");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (entries_(i, j) != entries_(j, i)) {
        throw std::invalid_argument(entry_name(i, j) + " ≠ " + entry_name(j, i));
      }
      if (entries_(i, j) < 0) {
        throw std::invalid_argument(entry_name(i, j) + " is negative");
      }
    }
  }
}

SquaredDistanceMatrix SquaredDistanceMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  return SquaredDistanceMatrix(RationalMatrix::from_rows(rows));
}

SquaredDistanceMatrix SquaredDistanceMatrix::subset(
    std::span<const std::size_t> indices) const {
  RationalMatrix out(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (indices[i] >= points() || indices[j] >= points()) {
        throw std::out_of_range("point index out of range");
      }
      out(i, j) = entries_(indices[i], indices[j]);
    }
  }
  return SquaredDistanceMatrix(std::move(out));
}

SquaredDistanceMatrix SquaredDistanceMatrix::permuted(
    std::span<const std::size_t> perm) const {
  if (perm.size() != points()) {
    throw std::invalid_argument("permutation size does not match point count");
  }
  return subset(perm);
}

SquaredDistanceMatrix SquaredDistanceMatrix::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  RationalMatrix out(points(), points());
  for (std::size_t i = 0; i < points(); ++i) {
    for (std::size_t j = 0; j < points(); ++j) out(i, j) = entries_(i, j) * factor;
  }
  return SquaredDistanceMatrix(std::move(out));
}

}  // namespace cmgeo
