#include "cmgeo/mapping.hpp"

#include "cmgeo/cross_polytope.hpp"
#include "cmgeo/distance_core.hpp"

#include <stdexcept>
#include <utility>

namespace cmgeo {

MappingScenario::MappingScenario(std::size_t n_, Rational a_sq_)
    : n(n_), a_sq(std::move(a_sq_)) {
  if (n < 2) throw std::invalid_argument("scenario dimension n must be >= 2");
  if (a_sq <= 0) throw std::invalid_argument("A_sq must be positive");
}

Rational circumradius_sq(std::size_t k, const Rational& edge_sq) {
  if (k < 1) throw std::invalid_argument("simplex dimension k must be >= 1");
  if (edge_sq <= 0) throw std::invalid_argument("edge_sq must be positive");
  return edge_sq * Rational(BigInt(k), 2 * BigInt(k + 1));
}

SquaredDistanceMatrix construction_distance_matrix(const MappingScenario& sc) {
  const std::size_t count = sc.n + 2;
  const Rational cable_sq = 4 * sc.a_sq / Rational(BigInt(sc.n));
  const Rational simplex_sq = 2 * sc.a_sq;
  RationalMatrix m(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Rational& value = (i == 0 && j == 1) ? cable_sq
                              : (i >= 2)         ? simplex_sq
                                                 : sc.a_sq;
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return SquaredDistanceMatrix(std::move(m));
}

bool verify_bridge(const MappingScenario& sc) {
  const Rational half_cable_sq = sc.a_sq / Rational(BigInt(sc.n));  // (c/2)^2
  const Rational radius_sq = circumradius_sq(sc.n - 1, 2 * sc.a_sq);
  return half_cable_sq + radius_sq == sc.a_sq;
}

bool cable_strut_passes(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const Rational gap = 3 - Rational(4, BigInt(n));
  return gap > 0 && gap * gap > 5;
}

Rational fold_distance_sq(const MappingScenario& sc, const Rational& t) {
  const Rational cable_sq = 4 * sc.a_sq / Rational(BigInt(sc.n));
  return cable_sq / (1 + t * t);
}

MappingReport mapping_report(const MappingScenario& sc) {
  MappingReport report;
  report.c_sq = 4 * sc.a_sq / Rational(BigInt(sc.n));
  report.s_sq = 2 * sc.a_sq;
  report.ratio_sq = report.c_sq / report.s_sq;
  report.threshold_passed = cable_strut_passes(sc.n);
  report.bridge_ok = verify_bridge(sc);

  const auto dimension = embedding_dimension(construction_distance_matrix(sc));
  if (!dimension) throw std::logic_error("bridged simplex construction must be realizable");
  report.construction_dimension = *dimension;

  const FlatnessVerdict flat =
      classify_flatness(CrossPolytopeSpec(sc.n, sc.a_sq, 2 * sc.a_sq));
  report.cross_polytope_flat = (flat.kind == Flatness::flat);

  report.isometry_criterion = report.threshold_passed && report.bridge_ok &&
                              report.cross_polytope_flat &&
                              report.construction_dimension == sc.n;
  return report;
}

}  // namespace cmgeo
