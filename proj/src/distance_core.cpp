#include "cmgeo/distance_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cmgeo {

RationalMatrix cm_matrix(const SquaredDistanceMatrix& d) {
  const std::size_t k = d.points();
  RationalMatrix m(k + 1, k + 1);
  for (std::size_t j = 1; j <= k; ++j) {
    m(0, j) = 1;
    m(j, 0) = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i + 1, j + 1) = d(i, j);
  }
  return m;
}

Rational cm_determinant(const SquaredDistanceMatrix& d) {
  return exact_determinant(cm_matrix(d));
}

Rational simplex_volume_sq(const SquaredDistanceMatrix& d) {
  const std::size_t k = d.points() - 1;
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) factorial *= i;
  const BigInt denom = (BigInt(1) << k) * factorial * factorial;
  const Rational value = cm_determinant(d) / Rational(denom);
  return (k % 2 == 0) ? -value : value;  // (-1)^(k+1)
}

RationalMatrix gram_matrix(const SquaredDistanceMatrix& d, std::size_t anchor) {
  const std::size_t k = d.points();
  if (anchor >= k) throw std::out_of_range("anchor index out of range");
  std::vector<std::size_t> rest;
  rest.reserve(k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (i != anchor) rest.push_back(i);
  }
  RationalMatrix g(k - 1, k - 1);
  for (std::size_t a = 0; a < rest.size(); ++a) {
    for (std::size_t b = a; b < rest.size(); ++b) {
      Rational value = (d(anchor, rest[a]) + d(anchor, rest[b]) - d(rest[a], rest[b])) / 2;
      g(a, b) = value;
      g(b, a) = std::move(value);
    }
  }
  return g;
}

InertiaSignature inertia(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inertia of a non-square matrix");
  if (!m.is_symmetric()) throw std::invalid_argument("inertia of a non-symmetric matrix");

  RationalMatrix w = m;
  std::vector<std::size_t> active(m.rows());
  std::iota(active.begin(), active.end(), std::size_t{0});

  InertiaSignature sig;
  while (!active.empty()) {
    // 1x1 step on the first nonzero diagonal entry.
    auto diag_it = std::find_if(active.begin(), active.end(),
                                [&](std::size_t p) { return w(p, p) != 0; });
    if (diag_it != active.end()) {
      const std::size_t p = *diag_it;
      const Rational pivot = w(p, p);
      (pivot > 0 ? sig.positive : sig.negative) += 1;
      active.erase(diag_it);
      for (std::size_t i : active) {
        for (std::size_t j : active) w(i, j) -= w(i, p) * w(j, p) / pivot;
      }
      continue;
    }

    // Every remaining diagonal entry is zero. A nonzero off-diagonal pair
    // forms an antidiagonal 2x2 block [[0,c],[c,0]] with eigenvalues +-c.
    std::size_t p = 0, q = 0;
    bool found = false;
    for (std::size_t a = 0; a < active.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < active.size() && !found; ++b) {
        if (w(active[a], active[b]) != 0) {
          p = active[a];
          q = active[b];
          found = true;
        }
      }
    }
    if (!found) {
      sig.zero += active.size();
      break;
    }
    const Rational c = w(p, q);
    sig.positive += 1;
    sig.negative += 1;
    std::erase(active, p);
    std::erase(active, q);
    // Schur complement against the block: B^-1 = [[0,1/c],[1/c,0]].
    for (std::size_t i : active) {
      for (std::size_t j : active) {
        w(i, j) -= (w(i, p) * w(q, j) + w(i, q) * w(p, j)) / c;
      }
    }
  }
  return sig;
}

std::optional<std::size_t> embedding_dimension(const SquaredDistanceMatrix& d) {
  const InertiaSignature sig = inertia(gram_matrix(d, 0));
  if (sig.negative != 0) return std::nullopt;
  return sig.positive;
}

Realization realize_floating(const SquaredDistanceMatrix& d) {
  const auto dim = embedding_dimension(d);
  if (!dim) {
    throw std::invalid_argument("realize_floating: matrix is not realizable");
  }

  const std::size_t k = d.points();
  RationalMatrix g = gram_matrix(d, 0);
  const std::size_t m = g.rows();

  // Pivoted outer-product Cholesky on the positive semidefinite Gram matrix:
  // G = sum_t v_t v_t^T / p_t. Everything here is exact; square roots happen
  // only when coordinates are emitted below.
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> pivots;
  std::vector<bool> used(m, false);
  for (std::size_t step = 0; step < *dim; ++step) {
    std::size_t best = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      if (g(i, i) <= 0) continue;
      if (best == m || g(i, i) > g(best, best)) best = i;
    }
    if (best == m) break;  // remaining block is exactly zero
    const Rational pivot = g(best, best);
    std::vector<Rational> column(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (!used[i]) column[i] = g(i, best);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!used[j]) g(i, j) -= column[i] * column[j] / pivot;
      }
    }
    used[best] = true;
    columns.push_back(std::move(column));
    pivots.push_back(pivot);
  }

  Realization out;
  out.dimension = *dim;
  out.coordinates.assign(k, std::vector<double>(*dim, 0.0));
  for (std::size_t t = 0; t < columns.size(); ++t) {
    const double root = std::sqrt(pivots[t].convert_to<double>());
    for (std::size_t i = 0; i < m; ++i) {
      out.coordinates[i + 1][t] = columns[t][i].convert_to<double>() / root;
    }
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < *dim; ++t) {
        const double delta = out.coordinates[i][t] - out.coordinates[j][t];
        acc += delta * delta;
      }
      worst = std::max(worst, std::fabs(acc - d(i, j).convert_to<double>()));
    }
  }
  out.max_residual = worst;
  return out;
}

}  // namespace cmgeo
