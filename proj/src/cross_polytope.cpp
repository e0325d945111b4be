#include "cmgeo/cross_polytope.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cmgeo {

namespace {

Rational rational_pow(const Rational& base, std::size_t exponent) {
  Rational out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Exact univariate polynomials, coefficients in ascending degree order.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * BigInt(i));
  return out;
}

// Remainder of a by b (b nonzero), in place of long division.
Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    poly_trim(a);
  }
  return a;
}

Poly poly_divide_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  poly_trim(rem);
  Poly quot(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0);
  while (rem.size() >= b.size() && !rem.empty()) {
    const Rational factor = rem.back() / b.back();
    const std::size_t shift = rem.size() - b.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    poly_trim(rem);
  }
  if (!rem.empty()) throw std::logic_error("polynomial division was not exact");
  return quot;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

// Exact coefficients of the degree <= node_count-1 polynomial through the
// sample points, by Newton divided differences.
Poly poly_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n; i-- > j;) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  Poly result;
  Poly basis = {Rational(1)};
  for (std::size_t i = 0; i < n; ++i) {
    if (result.size() < basis.size()) result.resize(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += dd[i] * basis[t];
    // basis *= (x - xs[i])
    basis.insert(basis.begin(), Rational(0));
    for (std::size_t t = 0; t + 1 < basis.size(); ++t) basis[t] -= xs[i] * basis[t + 1];
  }
  poly_trim(result);
  return result;
}

// The pentagon determinant as an exact polynomial in the squared diagonal.
// Each of the five diagonal entries appears once per matrix row, so the
// degree is at most five; seven sample nodes pin it down with one to spare.
Poly pentagon_det_poly(const Rational& a_sq) {
  std::vector<Rational> xs, ys;
  for (int node = 0; node <= 6; ++node) {
    xs.emplace_back(node);
    ys.push_back(pentagon_cm_det(a_sq, Rational(node)));
  }
  return poly_interpolate(xs, ys);
}

}  // namespace

CrossPolytopeSpec::CrossPolytopeSpec(std::size_t n_, Rational a_sq_, Rational b_sq_)
    : n(n_), a_sq(std::move(a_sq_)), b_sq(std::move(b_sq_)) {
  if (n < 2) throw std::invalid_argument("cross-polytope dimension n must be >= 2");
  if (a_sq <= 0) throw std::invalid_argument("a_sq must be positive");
  if (b_sq <= 0) throw std::invalid_argument("b_sq must be positive");
}

SquaredDistanceMatrix cross_distance_matrix(const CrossPolytopeSpec& spec) {
  const std::size_t count = 2 * spec.n;
  RationalMatrix m(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Rational& value = (i / 2 == j / 2) ? spec.b_sq : spec.a_sq;
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return SquaredDistanceMatrix(std::move(m));
}

Rational closed_form_determinant(const CrossPolytopeSpec& spec) {
  return Rational(2 * BigInt(spec.n)) * rational_pow(spec.b_sq, spec.n) *
         rational_pow(2 * spec.a_sq - spec.b_sq, spec.n - 1);
}

ClosedFormCheck verify_closed_form(const CrossPolytopeSpec& spec) {
  ClosedFormCheck out;
  out.cm_det = cm_determinant(cross_distance_matrix(spec));
  out.closed_form = closed_form_determinant(spec);
  out.equal = (out.cm_det == out.closed_form);
  return out;
}

FlatnessVerdict classify_flatness(const CrossPolytopeSpec& spec) {
  const SquaredDistanceMatrix d = cross_distance_matrix(spec);
  FlatnessVerdict verdict;
  verdict.cm_det = cm_determinant(d);
  verdict.closed_form = closed_form_determinant(spec);
  const auto dimension = embedding_dimension(d);
  if (!dimension) {
    verdict.kind = Flatness::not_realizable;
    return verdict;
  }
  verdict.dimension = *dimension;
  verdict.kind = (spec.b_sq == 2 * spec.a_sq) ? Flatness::flat : Flatness::full_dimensional;
  return verdict;
}

Rational pentagon_cm_det(const Rational& a_sq, const Rational& d_sq) {
  if (a_sq <= 0) throw std::invalid_argument("a_sq must be positive");
  if (d_sq < 0) throw std::invalid_argument("d_sq must be non-negative");
  RationalMatrix m(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      const std::size_t gap = j - i;
      const Rational& value = (gap == 1 || gap == 4) ? a_sq : d_sq;
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return cm_determinant(SquaredDistanceMatrix(std::move(m)));
}

double pentagon_flat_diagonal(const Rational& a_sq, const Rational& lo, const Rational& hi,
                              double tol) {
  if (a_sq <= 0) throw std::invalid_argument("a_sq must be positive");
  if (lo < 0) throw std::invalid_argument("bracket must be non-negative");
  if (lo >= hi) throw std::invalid_argument("bracket is empty");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");

  const Poly det = pentagon_det_poly(a_sq);
  if (det.empty()) throw std::logic_error("pentagon determinant vanished identically");
  const Poly radical = poly_divide_exact(det, poly_gcd(det, poly_derivative(det)));

  Rational left = lo;
  Rational right = hi;
  int sign_left = sign(poly_eval(radical, left));
  const int sign_right = sign(poly_eval(radical, right));
  if (sign_left == 0) return left.convert_to<double>();
  if (sign_right == 0) return right.convert_to<double>();
  if (sign_left == sign_right) {
    throw std::invalid_argument("no sign change in bracket [" + format_rational(lo) + ", " +
                                format_rational(hi) + "]");
  }

  const Rational width(tol);
  while (right - left > width) {
    const Rational mid = (left + right) / 2;
    const int sign_mid = sign(poly_eval(radical, mid));
    if (sign_mid == 0) return mid.convert_to<double>();
    if (sign_mid == sign_left) {
      left = mid;
    } else {
      right = mid;
    }
  }

  // The bracket is already below tol; a few exact Newton steps on the
  // squarefree part sharpen the root to full double precision. The root is
  // simple, so convergence is quadratic.
  Rational root = (left + right) / 2;
  const Poly radical_deriv = poly_derivative(radical);
  for (int i = 0; i < 4; ++i) {
    const Rational deriv = poly_eval(radical_deriv, root);
    if (deriv == 0) break;
    root -= poly_eval(radical, root) / deriv;
  }
  if (root < left || root > right) root = (left + right) / 2;
  return root.convert_to<double>();
}

}  // namespace cmgeo
