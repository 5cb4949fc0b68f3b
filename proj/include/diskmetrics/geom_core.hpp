#pragma once

// Closed-form Euclidean primitives in complex notation: angles, line
// intersections, circumcenters, reflections, and the inversion of the disk
// that swaps two points while preserving their chord.

#include <cmath>
#include <complex>
#include <utility>

#include "diskmetrics/types.hpp"

namespace diskmetrics {

/// Angle at `vertex` subtended by `a` and `b`, in [0, pi].
inline double angle_at(Point vertex, Point a, Point b, const ToleranceConfig& tol = {}) {
  const Point u = a - vertex;
  const Point w = b - vertex;
  const double scale = std::max({1.0, std::abs(vertex), std::abs(a), std::abs(b)});
  if (std::abs(u) <= tol.eq_tol * scale || std::abs(w) <= tol.eq_tol * scale) {
    throw Error(ErrorKind::DegenerateAngle, "vertex coincides with a ray endpoint");
  }
  const Point x = std::conj(u) * w;
  return std::atan2(std::abs(x.imag()), x.real());
}

/// Intersection of L[a,b] and L[c,d] as u/v with
///   u = (conj(a) b - a conj(b))(c - d) - (a - b)(conj(c) d - c conj(d)),
///   v = (conj(a) - conj(b))(c - d) - (a - b)(conj(c) - conj(d)).
inline Point line_intersection(Point a, Point b, Point c, Point d, const ToleranceConfig& tol = {}) {
  const double ab = std::abs(a - b);
  const double cd = std::abs(c - d);
  if (ab <= tol.eq_tol * detail::scale_of(a, b) || cd <= tol.eq_tol * detail::scale_of(c, d)) {
    throw Error(ErrorKind::DegenerateLine, "line through coincident points");
  }
  const Point u = (std::conj(a) * b - a * std::conj(b)) * (c - d) - (a - b) * (std::conj(c) * d - c * std::conj(d));
  const Point v = std::conj(a - b) * (c - d) - (a - b) * std::conj(c - d);
  if (std::abs(v) <= tol.eq_tol * ab * cd) throw Error(ErrorKind::ParallelLines, "lines are parallel");
  return u / v;
}

/// Center of the circle through three non-collinear points.
inline Point circumcenter(Point a, Point b, Point c, const ToleranceConfig& tol = {}) {
  const Point num = std::norm(a) * (b - c) + std::norm(b) * (c - a) + std::norm(c) * (a - b);
  const Point den = a * std::conj(c - b) + b * std::conj(a - c) + c * std::conj(b - a);
  const double spread = std::abs(b - a) * std::abs(c - a);
  if (spread == 0.0 || std::abs(den) <= tol.eq_tol * spread) {
    throw Error(ErrorKind::CollinearPoints, "circumcenter of collinear or repeated points");
  }
  return num / den;
}

/// Mirror image of z in the line L[a,b].
inline Point reflect_in_line(Point z, Point a, Point b, const ToleranceConfig& tol = {}) {
  if (std::abs(a - b) <= tol.eq_tol * detail::scale_of(a, b)) {
    throw Error(ErrorKind::DegenerateLine, "reflection line through coincident points");
  }
  const Point d = std::conj(a - b);
  return (a - b) / d * std::conj(z) - (a * std::conj(b) - std::conj(a) * b) / d;
}

/// Euclidean distance from the origin to L[a,b].
inline double origin_line_distance(Point a, Point b) {
  return std::abs(std::conj(a) * b - a * std::conj(b)) / (2.0 * std::abs(a - b));
}

/// a* = a / |a|^2, the reflection of a in the unit circle.
inline Point unit_circle_reflection(Point a) { return a / std::norm(a); }

/// Center c = LIS[a, b, a*, b*] of the inversion h with h(a) = b that keeps
/// the chord through a and b invariant. Always |c| > 1.
inline Point inversion_center(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_in_disk(a, "a");
  detail::require_in_disk(b, "b");
  const double scale = detail::scale_of(a, b);
  if (std::abs(a - b) <= tol.eq_tol * scale) throw Error(ErrorKind::EqualModulus, "a = b");
  if (origin_line_distance(a, b) <= tol.eq_tol * scale) {
    throw Error(ErrorKind::CollinearWithOrigin, "a, b and 0 are collinear");
  }
  const double ra = std::abs(a);
  const double rb = std::abs(b);
  if (std::abs(ra - rb) <= tol.eq_tol * scale) throw Error(ErrorKind::EqualModulus, "|a| = |b|");
  // (a(1-|b|^2) - b(1-|a|^2)) / (|a|^2 - |b|^2); the difference of squares is
  // factored to keep relative accuracy when |a| and |b| are close.
  return (a * detail::one_minus_norm(b) - b * detail::one_minus_norm(a)) / ((ra - rb) * (ra + rb));
}

/// h(z) = (c conj(z) - 1) / (conj(z) - conj(c)).
inline Point apply_inversion(Point c, Point z, const ToleranceConfig& tol = {}) {
  if (!(std::abs(c) > 1.0)) throw Error(ErrorKind::DomainError, "inversion center must satisfy |c| > 1");
  const Point den = std::conj(z) - std::conj(c);
  if (std::abs(den) < tol.eq_tol) throw Error(ErrorKind::PoleInput, "z is the pole of the inversion");
  return (c * std::conj(z) - 1.0) / den;
}

/// The circle S(c, sqrt(|c|^2 - 1)) orthogonal to the unit circle.
inline Circle orthogonal_circle(Point c) { return Circle{c, std::sqrt(std::norm(c) - 1.0)}; }

/// Points where S(c, sqrt(|c|^2-1)), c = inversion_center(a, b), meets the
/// unit circle: (1 +- i sqrt(|c|^2-1)) / conj(c). First is the '+' root.
inline std::pair<Point, Point> orthocircle_boundary_points(Point a, Point b, const ToleranceConfig& tol = {}) {
  const Point c = inversion_center(a, b, tol);
  const double r = std::sqrt(std::norm(c) - 1.0);
  const Point cc = std::conj(c);
  return {Point(1.0, r) / cc, Point(1.0, -r) / cc};
}

/// |alpha z^2 + beta z + gamma| for the quadratic whose roots are the two
/// orthocircle boundary points:
///   alpha = conj(a)(1-|b|^2) - conj(b)(1-|a|^2), beta = -2(|a|^2 - |b|^2),
///   gamma = a(1-|b|^2) - b(1-|a|^2).
inline double boundary_quadratic_residual(Point a, Point b, Point z) {
  const double ia = detail::one_minus_norm(a);
  const double ib = detail::one_minus_norm(b);
  const Point alpha = std::conj(a) * ib - std::conj(b) * ia;
  const double beta = -2.0 * (std::norm(a) - std::norm(b));
  const Point gamma = a * ib - b * ia;
  return std::abs((alpha * z + beta) * z + gamma);
}

/// Intersection of the orthogonal circle through the inversion with the
/// chord L[a,b] that lies inside the disk; the inversion fixes this point.
inline Point orthocircle_chord_point(Point a, Point b, const ToleranceConfig& tol = {}) {
  const Point c = inversion_center(a, b, tol);
  const double r = std::sqrt(std::norm(c) - 1.0);
  // c lies on L[a,b] and a, b are on the same side of it.
  const Point dir = (a - c) / std::abs(a - c);
  return c + r * dir;
}

}  // namespace diskmetrics
