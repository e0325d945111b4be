#pragma once

#include "cmgeo/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cmgeo {

/// Counts of positive, negative and zero pivots of a symmetric congruence
/// decomposition. Invariant under change of basis (Sylvester's law), so the
/// counts are a property of the matrix itself.
struct InertiaSignature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  bool operator==(const InertiaSignature&) const = default;
};

/// Floating-point coordinates reproducing a squared-distance matrix.
struct Realization {
  std::size_t dimension = 0;
  std::vector<std::vector<double>> coordinates;  // one row per point
  double max_residual = 0.0;                     // worst squared-distance error
};

/// The bordered Cayley-Menger matrix of k points: size k+1, corner 0, border
/// of ones, squared distances in the trailing block.
RationalMatrix cm_matrix(const SquaredDistanceMatrix& d);

/// Exact Cayley-Menger determinant of the configuration.
Rational cm_determinant(const SquaredDistanceMatrix& d);

/// Squared k-volume of the simplex on k+1 points:
///   vol_k^2 = (-1)^(k+1) * cm_determinant / (2^k * (k!)^2).
/// Exact; a negative value signals a non-realizable configuration.
Rational simplex_volume_sq(const SquaredDistanceMatrix& d);

/// Gram matrix of the difference vectors from the anchor point:
///   G(i,j) = (d2(anchor,i) + d2(anchor,j) - d2(i,j)) / 2
/// over the k-1 non-anchor points, in index order.
RationalMatrix gram_matrix(const SquaredDistanceMatrix& d, std::size_t anchor);

/// Inertia of a symmetric matrix by exact LDL^T-style elimination with
/// symmetric pivoting. When every remaining diagonal entry is zero but some
/// off-diagonal entry is not, a 2x2 antidiagonal block step contributes one
/// positive and one negative pivot.
InertiaSignature inertia(const RationalMatrix& m);

/// Smallest Euclidean dimension realizing the squared-distance matrix, or
/// nullopt when no realization exists. Decided by the signature of the
/// anchored Gram matrix: realizable iff no negative pivots, and then the
/// dimension is the positive pivot count.
std::optional<std::size_t> embedding_dimension(const SquaredDistanceMatrix& d);

/// Floating coordinates in the minimal dimension, from an exact pivoted
/// Cholesky factorization of the Gram matrix; only the final square roots
/// are floating point. Throws std::invalid_argument when not realizable.
Realization realize_floating(const SquaredDistanceMatrix& d);

}  // namespace cmgeo
