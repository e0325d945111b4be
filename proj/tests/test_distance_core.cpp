#include "cmgeo/distance_core.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using namespace cmgeo;
namespace oracle = cmgeo::testing;

namespace {

SquaredDistanceMatrix uniform_sdm(std::size_t points, const Rational& value) {
  RationalMatrix m(points, points);
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = 0; j < points; ++j) {
      if (i != j) m(i, j) = value;
    }
  }
  return SquaredDistanceMatrix(std::move(m));
}

SquaredDistanceMatrix triangle(const Rational& d01, const Rational& d02, const Rational& d12) {
  return SquaredDistanceMatrix::from_rows({{0, d01, d02}, {d01, 0, d12}, {d02, d12, 0}});
}

double dist_sq(const std::vector<double>& p, const std::vector<double>& q) {
  double acc = 0.0;
  for (std::size_t t = 0; t < p.size(); ++t) acc += (p[t] - q[t]) * (p[t] - q[t]);
  return acc;
}

}  // namespace

TEST_CASE("squared-distance matrix validation") {
  CHECK_THROWS_WITH_AS(SquaredDistanceMatrix::from_rows({{0, 1}, {2, 0}}),
                       "entry (0,1) ≠ entry (1,0)", std::invalid_argument);
  CHECK_THROWS_WITH_AS(SquaredDistanceMatrix::from_rows({{1}}), "entry (0,0) must be 0",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(SquaredDistanceMatrix::from_rows({{0, -1}, {-1, 0}}),
                       "entry (0,1) is negative", std::invalid_argument);
  CHECK_THROWS_AS(SquaredDistanceMatrix(RationalMatrix(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(SquaredDistanceMatrix(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("cm_matrix borders the squared distances with ones") {
  const auto m = cm_matrix(SquaredDistanceMatrix::from_rows({{0, 9}, {9, 0}}));
  CHECK(m == RationalMatrix::from_rows({{0, 1, 1}, {1, 0, 9}, {1, 9, 0}}));

  const auto single = cm_matrix(SquaredDistanceMatrix::from_rows({{0}}));
  CHECK(single == RationalMatrix::from_rows({{0, 1}, {1, 0}}));

  // 4 unit-separated points: zero diagonal, every other entry 1.
  const auto tetra = cm_matrix(uniform_sdm(4, 1));
  REQUIRE(tetra.rows() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(tetra(i, j) == (i == j ? 0 : 1));
    }
  }
}

TEST_CASE("cm_determinant on documented configurations") {
  CHECK(cm_determinant(SquaredDistanceMatrix::from_rows({{0, 9}, {9, 0}})) == 18);
  CHECK(cm_determinant(triangle(1, 4, 1)) == 0);  // collinear
  CHECK(cm_determinant(uniform_sdm(4, 1)) == 4);
  CHECK(cm_determinant(uniform_sdm(5, 1)) == -5);
  CHECK(cm_determinant(SquaredDistanceMatrix::from_rows({{0}})) == -1);  // single point
}

TEST_CASE("cm_determinant matches cofactor expansion on the regular simplices") {
  for (std::size_t points : {2, 3, 4, 5, 6}) {
    const auto d = uniform_sdm(points, 1);
    CHECK(cm_determinant(d) == oracle::cofactor_determinant(cm_matrix(d)));
  }
}

TEST_CASE("simplex_volume_sq") {
  CHECK(simplex_volume_sq(SquaredDistanceMatrix::from_rows({{0, 1}, {1, 0}})) == 1);
  CHECK(simplex_volume_sq(SquaredDistanceMatrix::from_rows({{0, 9}, {9, 0}})) == 9);
  CHECK(simplex_volume_sq(triangle(1, 4, 1)) == 0);
  CHECK(simplex_volume_sq(SquaredDistanceMatrix::from_rows({{0}})) == 1);  // point

  // Heron oracle: 16 * area^2 = 2(a b + b c + c a) - a^2 - b^2 - c^2 in the
  // squared side lengths.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto d = oracle::random_point_sdm(rng, 3, 2);
    const Rational a = d(0, 1), b = d(0, 2), c = d(1, 2);
    const Rational heron = (2 * (a * b + b * c + c * a) - a * a - b * b - c * c) / 16;
    CHECK(simplex_volume_sq(d) == heron);
  }
  CHECK(simplex_volume_sq(uniform_sdm(3, 1)) == Rational(3, 16));
}

TEST_CASE("gram_matrix") {
  CHECK(gram_matrix(triangle(1, 1, 2), 0) == RationalMatrix::from_rows({{1, 0}, {0, 1}}));
  CHECK(gram_matrix(uniform_sdm(3, 1), 0) ==
        RationalMatrix::from_rows({{1, Rational(1, 2)}, {Rational(1, 2), 1}}));
  CHECK(gram_matrix(SquaredDistanceMatrix::from_rows({{0, 7}, {7, 0}}), 0) ==
        RationalMatrix::from_rows({{7}}));
  CHECK_THROWS_AS(gram_matrix(uniform_sdm(3, 1), 3), std::out_of_range);
}

TEST_CASE("inertia on small matrices") {
  CHECK(inertia(RationalMatrix::from_rows({{1, 0}, {0, 1}})) == InertiaSignature{2, 0, 0});
  CHECK(inertia(RationalMatrix::from_rows({{0, 0}, {0, 0}})) == InertiaSignature{0, 0, 2});
  CHECK(inertia(RationalMatrix::from_rows({{1, 2}, {2, 1}})) == InertiaSignature{1, 1, 0});
  // Zero diagonal forces the antidiagonal 2x2 block step.
  CHECK(inertia(RationalMatrix::from_rows({{0, 3}, {3, 0}})) == InertiaSignature{1, 1, 0});
  CHECK(inertia(RationalMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}})) ==
        InertiaSignature{2, 1, 0});
  CHECK(inertia(RationalMatrix(0, 0)) == InertiaSignature{0, 0, 0});
  CHECK_THROWS_AS(inertia(RationalMatrix::from_rows({{0, 1}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("inertia matches the sign pattern of random congruences") {
  // Diagonal D with known signs, pushed through random congruence B^T D B:
  // the signature of the result must match D's whenever B is invertible.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<int> signs(n);
    InertiaSignature expected;
    for (auto& s : signs) {
      s = static_cast<int>(rng() % 3) - 1;
      (s > 0 ? expected.positive : s < 0 ? expected.negative : expected.zero) += 1;
    }
    RationalMatrix b(n, n);
    Rational det;
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = oracle::random_rational(rng, 4, 3);
      det = exact_determinant(b);
    } while (det == 0);
    RationalMatrix congruent(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += b(t, i) * Rational(signs[t]) * b(t, j);
        congruent(i, j) = acc;
      }
    }
    CHECK(inertia(congruent) == expected);
  }
}

TEST_CASE("embedding_dimension") {
  CHECK(embedding_dimension(SquaredDistanceMatrix::from_rows({{0, 1}, {1, 0}})) == 1);
  CHECK(embedding_dimension(uniform_sdm(4, 1)) == 3);
  CHECK_FALSE(embedding_dimension(triangle(1, 1, 9)).has_value());
  CHECK(embedding_dimension(SquaredDistanceMatrix::from_rows({{0}})) == 0);
  // Coincident points are legal and contribute nothing to the dimension.
  CHECK(embedding_dimension(SquaredDistanceMatrix::from_rows({{0, 0}, {0, 0}})) == 0);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const auto d = oracle::random_point_sdm(rng, dim + 3, dim);
    const auto r = embedding_dimension(d);
    REQUIRE(r.has_value());
    CHECK(*r <= dim);
  }
}

TEST_CASE("realize_floating roundtrips the distances") {
  const auto segment = realize_floating(SquaredDistanceMatrix::from_rows({{0, 4}, {4, 0}}));
  CHECK(segment.dimension == 1);
  CHECK(std::fabs(std::sqrt(dist_sq(segment.coordinates[0], segment.coordinates[1])) - 2.0) <
        1e-12);

  const auto tri = realize_floating(uniform_sdm(3, 1));
  CHECK(tri.dimension == 2);
  CHECK(tri.max_residual <= 1e-10);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(std::fabs(dist_sq(tri.coordinates[i], tri.coordinates[j]) - 1.0) <= 1e-10);
    }
  }

  CHECK_THROWS_AS(realize_floating(triangle(1, 1, 9)), std::invalid_argument);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = oracle::random_point_sdm(rng, 5, 3);
    const auto real = realize_floating(d);
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        worst = std::max(worst, std::fabs(dist_sq(real.coordinates[i], real.coordinates[j]) -
                                          d(i, j).convert_to<double>()));
      }
    }
    CHECK(worst <= real.max_residual);
    CHECK(real.max_residual <= 1e-9);
  }
}

TEST_CASE("property: determinant invariance under relabeling") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t points = 2 + trial % 5;
    const auto d = oracle::random_sdm(rng, points);
    std::vector<std::size_t> perm(points);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(cm_determinant(d.permuted(perm)) == cm_determinant(d));
  }
}

TEST_CASE("property: homogeneity of degree k in the squared distances") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t points = 2 + trial % 5;
    const std::size_t k = points - 1;
    const auto d = oracle::random_sdm(rng, points);
    const Rational lambda = oracle::random_positive_rational(rng);
    Rational factor = 1;
    for (std::size_t i = 0; i < k; ++i) factor *= lambda;
    CHECK(cm_determinant(d.scaled(lambda)) == factor * cm_determinant(d));
  }
}

TEST_CASE("property: Gram signature does not depend on the anchor") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = oracle::random_sdm(rng, 4 + trial % 3);
    const auto reference = inertia(gram_matrix(d, 0));
    for (std::size_t anchor = 1; anchor < d.points(); ++anchor) {
      CHECK(inertia(gram_matrix(d, anchor)) == reference);
    }
  }
}

TEST_CASE("property: any r+2 points of a rank-r configuration span zero volume") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t dim = 1 + trial % 2;
    const auto d = oracle::random_point_sdm(rng, dim + 4, dim);
    const auto r = embedding_dimension(d);
    REQUIRE(r.has_value());
    std::vector<std::size_t> all(d.points());
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (int subset_trial = 0; subset_trial < 5; ++subset_trial) {
      std::shuffle(all.begin(), all.end(), rng);
      if (*r + 2 > d.points()) break;
      const std::vector<std::size_t> pick(all.begin(), all.begin() + *r + 2);
      CHECK(simplex_volume_sq(d.subset(pick)) == 0);
    }
  }
}

TEST_CASE("property: fraction-free elimination agrees with cofactor expansion") {
  std::mt19937 rng(59);
  for (std::size_t size = 1; size <= 7; ++size) {
    for (int trial = 0; trial < 6; ++trial) {
      RationalMatrix m(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m(i, j) = oracle::random_rational(rng, 6, 4);
      CHECK(exact_determinant(m) == oracle::cofactor_determinant(m));
    }
  }
  // Singular matrices exercise the zero-pivot path.
  RationalMatrix singular = RationalMatrix::from_rows(
      {{0, 1, 2}, {0, 2, 4}, {1, 1, 1}});
  CHECK(exact_determinant(singular) == oracle::cofactor_determinant(singular));
}
