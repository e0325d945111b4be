#pragma once

#include "cmgeo/matrix.hpp"

#include <cstddef>

namespace cmgeo {

/// Two-distance setting around a point pair: a mapping of E^n preserves the
/// distance sqrt(A_sq) exactly and the distance sqrt(2 A_sq) up to the
/// flatness argument. Only squared lengths are stored, so everything stays
/// rational.
struct MappingScenario {
  MappingScenario(std::size_t n, Rational a_sq);

  std::size_t n;
  Rational a_sq;  // the squared preserved distance A^2
};

/// Checkable steps of the isometry argument for one scenario.
struct MappingReport {
  Rational c_sq;     // squared cable length, 4 A^2 / n
  Rational s_sq;     // squared strut length, 2 A^2
  Rational ratio_sq; // c_sq / s_sq = 2 / n
  bool threshold_passed = false;       // cable/strut ratio beats the golden-ratio bound
  bool bridge_ok = false;              // (c/2)^2 + R^2 = A^2 exactly
  std::size_t construction_dimension = 0;
  bool cross_polytope_flat = false;    // the (n, A^2, 2 A^2) cross-polytope is flat
  bool isometry_criterion = false;     // all of the above hold
};

/// Squared circumradius of the regular k-simplex with squared edge edge_sq:
/// edge_sq * k / (2 (k+1)).
Rational circumradius_sq(std::size_t k, const Rational& edge_sq);

/// Squared-distance matrix of the bridged simplex: points 0 and 1 at squared
/// distance 4 A^2 / n on the axis, points 2..n+1 a regular (n-1)-simplex with
/// squared edge 2 A^2 centered between them, and squared bridge distances A^2
/// from each axis point to each simplex vertex.
SquaredDistanceMatrix construction_distance_matrix(const MappingScenario& sc);

/// Exact identity (c/2)^2 + R^2 = A^2 for the construction; returns the
/// verdict so test suites can assert it.
bool verify_bridge(const MappingScenario& sc);

/// Exact decision of 2/n < ((sqrt(5)-1)/2)^2, rearranged so no irrational
/// value is ever computed: true iff 3 - 4/n > 0 and (3 - 4/n)^2 > 5.
bool cable_strut_passes(std::size_t n);

/// Squared distance between the two axis points after folding one of the two
/// bridged simplices out of the hyperplane. The fold angle is parametrized
/// rationally by t with cos(theta) = (1-t^2)/(1+t^2), giving exactly
/// c_sq / (1 + t^2). Equals c_sq at t=0 and decreases monotonically in |t|.
Rational fold_distance_sq(const MappingScenario& sc, const Rational& t);

/// Runs every checkable step for the scenario.
MappingReport mapping_report(const MappingScenario& sc);

}  // namespace cmgeo
