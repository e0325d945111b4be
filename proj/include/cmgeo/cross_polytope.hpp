#pragma once

#include "cmgeo/distance_core.hpp"
#include "cmgeo/matrix.hpp"

#include <cstddef>
#include <optional>

namespace cmgeo {

/// An equilateral, equidiagonal n-cross-polytope: every edge has squared
/// length a_sq, every diagonal (antipodal pair) squared length b_sq.
struct CrossPolytopeSpec {
  CrossPolytopeSpec(std::size_t n, Rational a_sq, Rational b_sq);

  std::size_t n;
  Rational a_sq;
  Rational b_sq;
};

enum class Flatness {
  flat,              // embedding dimension n; happens exactly when b_sq = 2 a_sq
  full_dimensional,  // realizable with embedding dimension 2n-1
  not_realizable,
};

struct FlatnessVerdict {
  Flatness kind = Flatness::not_realizable;
  std::optional<std::size_t> dimension;  // empty iff not realizable
  Rational cm_det;
  Rational closed_form;
};

struct ClosedFormCheck {
  Rational cm_det;
  Rational closed_form;
  bool equal = false;
};

/// The 2n x 2n squared-distance matrix of the cross-polytope with vertices
/// ordered as interleaved antipodal pairs: (0,1), (2,3), ... are diagonals
/// (b_sq), every other pair is an edge (a_sq).
SquaredDistanceMatrix cross_distance_matrix(const CrossPolytopeSpec& spec);

/// Closed form of the Cayley-Menger determinant of the cross-polytope
/// matrix: 2 n b_sq^n (2 a_sq - b_sq)^(n-1).
Rational closed_form_determinant(const CrossPolytopeSpec& spec);

/// Evaluates the generic exact determinant and the closed form side by side.
/// `equal` must hold for every spec; it certifies the closed form against an
/// independent elimination route.
ClosedFormCheck verify_closed_form(const CrossPolytopeSpec& spec);

/// Classifies the configuration: flat (dimension n, exactly when
/// b_sq = 2 a_sq), full-dimensional (dimension 2n-1), or not realizable.
/// Both determinant routes are embedded in the verdict.
FlatnessVerdict classify_flatness(const CrossPolytopeSpec& spec);

/// Exact Cayley-Menger determinant of five cyclically labeled points with
/// squared side a_sq between neighbors and squared diagonal d_sq otherwise.
Rational pentagon_cm_det(const Rational& a_sq, const Rational& d_sq);

/// Locates a squared diagonal in [lo, hi] where the pentagon determinant
/// vanishes, by bisection with exact sign evaluation at rational midpoints.
///
/// The determinant is a negative multiple of a perfect square in d_sq, so it
/// never changes sign across its roots. The bisection therefore runs on the
/// exact squarefree part of the determinant polynomial (recovered by exact
/// interpolation of determinant evaluations), which has the same roots, all
/// simple. Only the returned root is floating point.
///
/// Throws std::invalid_argument when the bracket does not straddle a root.
double pentagon_flat_diagonal(const Rational& a_sq, const Rational& lo, const Rational& hi,
                              double tol);

}  // namespace cmgeo
