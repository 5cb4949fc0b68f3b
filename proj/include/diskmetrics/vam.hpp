#pragma once

// The visual angle metric of the unit disk,
//   v(a,b) = sup { angle(a,z,b) : |z| = 1 },
// through each of the closed-form routes, plus a dispatcher and the two-sided
// bounds in terms of the hyperbolic distance and the chord midpoint.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diskmetrics/geom_core.hpp"
#include "diskmetrics/hyperbolic.hpp"
#include "diskmetrics/types.hpp"

namespace diskmetrics {

enum class Route { coincident, radial, equal_modulus, orthocircle, via_rho, hmid, quadratic };

constexpr std::string_view to_string(Route r) {
  switch (r) {
    case Route::coincident: return "coincident";
    case Route::radial: return "radial";
    case Route::equal_modulus: return "equal_modulus";
    case Route::orthocircle: return "orthocircle";
    case Route::via_rho: return "via_rho";
    case Route::hmid: return "hmid";
    case Route::quadratic: return "quadratic";
  }
  return "unknown";
}

inline std::optional<Route> route_from_string(std::string_view s) {
  for (Route r : {Route::coincident, Route::radial, Route::equal_modulus, Route::orthocircle, Route::via_rho,
                  Route::hmid, Route::quadratic}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

struct VamResult {
  double value = 0.0;
  std::optional<Point> extremal_point;
  Route route = Route::coincident;
  std::map<std::string, double> diagnostics;
};

namespace detail {

inline void require_pair(Point a, Point b, const ToleranceConfig& tol) {
  require_in_disk(a, "a");
  require_in_disk(b, "b");
  if (std::abs(a - b) <= tol.eq_tol * scale_of(a, b)) {
    throw Error(ErrorKind::CoincidentPoints, "a and b coincide");
  }
}

inline bool collinear_with_origin(Point a, Point b, const ToleranceConfig& tol) {
  return origin_line_distance(a, b) <= tol.eq_tol * scale_of(a, b);
}

inline bool equal_modulus(Point a, Point b, const ToleranceConfig& tol) {
  return std::abs(std::abs(a) - std::abs(b)) <= tol.eq_tol * scale_of(a, b);
}

/// Picks the candidate boundary point with the larger angle. Ties go to the
/// first candidate.
inline std::pair<double, Point> best_of(Point a, Point b, Point z1, Point z2, const ToleranceConfig& tol) {
  const double v1 = angle_at(z1, a, b, tol);
  const double v2 = angle_at(z2, a, b, tol);
  return v2 > v1 ? std::pair{v2, z2} : std::pair{v1, z1};
}

}  // namespace detail

/// a, b and 0 collinear: tan v = sh(rho/2), and v = arcsin((s-r)/(1-rs)) once
/// the chord is rotated onto the real axis with r < s. The extremal point is
/// the tangency point ((r+s)/(1+rs), sqrt((1-r^2)(1-s^2))/(1+rs)) rotated back.
inline VamResult vam_radial(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  if (!detail::collinear_with_origin(a, b, tol)) throw Error(ErrorKind::NotCollinear, "a, b, 0 not collinear");

  const Point dir = std::abs(a) >= std::abs(b) ? a / std::abs(a) : b / std::abs(b);
  double r = (a * std::conj(dir)).real();
  double s = (b * std::conj(dir)).real();
  if (r > s) std::swap(r, s);

  const double u = sinh_half_rho(a, b);
  const double tan_form = std::atan(u);
  const double arcsin_form = std::asin((s - r) / (1.0 - r * s));

  const double den = 1.0 + r * s;
  const Point p((r + s) / den, std::sqrt((1.0 - r * r) * (1.0 - s * s)) / den);

  VamResult out;
  out.value = tan_form;
  out.extremal_point = p * dir;
  out.route = Route::radial;
  out.diagnostics["arcsin_form"] = arcsin_form;
  out.diagnostics["tan_form"] = tan_form;
  return out;
}

/// |a| = |b|: v = 2 arctan(|a-b| / (2 - |a+b|)).
inline VamResult vam_equal_modulus(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  if (!detail::equal_modulus(a, b, tol)) throw Error(ErrorKind::NotEqualModulus, "|a| != |b|");

  VamResult out;
  out.value = 2.0 * std::atan(std::abs(a - b) / (2.0 - std::abs(a + b)));
  out.route = Route::equal_modulus;
  const Point sum = a + b;
  if (std::abs(sum) > tol.eq_tol * detail::scale_of(a, b)) {
    out.extremal_point = sum / std::abs(sum);
  } else {
    // Symmetric chord through 0: both tangency points +-i(b-a)/|b-a| are
    // extremal. Take the one above the chord when it is rotated to point
    // along the positive real axis.
    out.extremal_point = Point(0.0, 1.0) * (b - a) / std::abs(b - a);
  }
  return out;
}

/// General position: the larger of the angles at the two points where the
/// orthogonal circle S(c, sqrt(|c|^2-1)) meets the unit circle.
inline VamResult vam_orthocircle(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  const auto [z1, z2] = orthocircle_boundary_points(a, b, tol);
  const auto [value, z] = detail::best_of(a, b, z1, z2, tol);

  VamResult out;
  out.value = value;
  out.extremal_point = z;
  out.route = Route::orthocircle;
  out.diagnostics["residual_z1"] = boundary_quadratic_residual(a, b, z1);
  out.diagnostics["residual_z2"] = boundary_quadratic_residual(a, b, z2);
  return out;
}

/// tan(v/2) = (1+|m|) u / (1 + sqrt(1 + (1-|m|^2) u^2)), u = sh(rho/2), where m
/// is the chord midpoint.
inline double tan_half_vam(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  const double m = std::abs(chord_midpoint(a, b, tol));
  const double u = sinh_half_rho(a, b);
  return (1.0 + m) * u / (1.0 + std::sqrt(1.0 + (1.0 - m) * (1.0 + m) * u * u));
}

inline VamResult vam_via_rho(Point a, Point b, const ToleranceConfig& tol = {}) {
  VamResult out;
  out.value = 2.0 * std::atan(tan_half_vam(a, b, tol));
  out.route = Route::via_rho;
  return out;
}

/// sin v in terms of u = sh(rho/2) and |m|.
inline double vam_sin(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  const double m = std::abs(chord_midpoint(a, b, tol));
  const double u = sinh_half_rho(a, b);
  const double root = 1.0 + std::sqrt(1.0 + (1.0 - m) * (1.0 + m) * u * u);
  return (1.0 + m) * root * u / (root + (1.0 + m) * u * u);
}

/// Via the hyperbolic midpoint m: after T_m the pair has equal modulus, the
/// candidates are q = T_m^{-1}(+-Q), Q = i (T_m(a) - T_m(b)) / |T_m(a) - T_m(b)|.
inline VamResult vam_hmid(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  const Point m = hyperbolic_midpoint(a, b);
  const Point ta = mobius_Ta(m, a, tol);
  const Point tb = mobius_Ta(m, b, tol);
  const Point q = Point(0.0, 1.0) * (ta - tb) / std::abs(ta - tb);
  const Point q1 = mobius_Ta(-m, q, tol);
  const Point q2 = mobius_Ta(-m, -q, tol);
  const auto [value, z] = detail::best_of(a, b, q1, q2, tol);

  VamResult out;
  out.value = value;
  out.extremal_point = z;
  out.route = Route::hmid;
  out.diagnostics["modulus_gap"] = std::abs(std::abs(ta) - std::abs(tb));
  return out;
}

/// Real coefficients of the quadratic A t^2 + B t + C = 0 whose smaller root
/// places p = a + t (b - a) i on the maximal inscribed circle through a and b.
/// With s = Im(a conj(b)), R = Re(a conj(b)):
///   A = 4(|a-b|^2 - s^2), B = 8 s (1 - R), C = -4(R^2 - |a|^2 - |b|^2 + 1).
struct InscribedQuadratic {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  [[nodiscard]] double discriminant() const { return B * B - 4.0 * A * C; }
};

inline InscribedQuadratic inscribed_quadratic(Point a, Point b) {
  const Point ab = a * std::conj(b);
  const double s = ab.imag();
  const double R = ab.real();
  return {4.0 * (std::norm(a - b) - s * s), 8.0 * s * (1.0 - R),
          -4.0 * (R * R - std::norm(a) - std::norm(b) + 1.0)};
}

/// The discriminant in closed form, 64 |a-b|^2 (1-|a|^2)(1-|b|^2).
inline double inscribed_discriminant_closed_form(Point a, Point b) {
  return 64.0 * std::norm(a - b) * detail::one_minus_norm(a) * detail::one_minus_norm(b);
}

inline VamResult vam_quadratic(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  const InscribedQuadratic q = inscribed_quadratic(a, b);
  const double disc = q.discriminant();
  const double disc_closed = inscribed_discriminant_closed_form(a, b);

  const double coeff_scale = std::max({std::abs(q.A), std::abs(q.B), std::abs(q.C)});
  std::vector<double> roots;
  if (std::abs(q.A) <= tol.eq_tol * coeff_scale) {
    // Degenerate leading coefficient: the remaining linear equation.
    if (q.B == 0.0) throw Error(ErrorKind::CoincidentPoints, "inscribed quadratic vanishes identically");
    roots.push_back(-q.C / q.B);
  } else {
    // Cancellation-free pair of roots; the discriminant is positive by the
    // closed form, so clamp rounding noise at zero.
    const double sq = std::sqrt(std::max(disc, 0.0));
    const double h = -0.5 * (q.B + std::copysign(sq, q.B));
    roots.push_back(h / q.A);
    if (h != 0.0) roots.push_back(q.C / h);
  }
  std::sort(roots.begin(), roots.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });

  const Point step = (b - a) * Point(0.0, 1.0);
  auto side = [&](Point z) { return (std::conj(b - a) * (z - a)).imag(); };
  auto evaluate = [&](double t) {
    const Point p = a + t * step;
    const Point center = 0.5 * (p + b);
    const Point tangency = center / std::abs(center);
    // The right angle sits at a, so the angle at p is acute. When p and the
    // tangency point lie on opposite arcs the inscribed angle is its
    // supplement (v > pi/2).
    const double at_p = angle_at(p, a, b, tol);
    const bool same_arc = (side(p) > 0) == (side(tangency) > 0);
    return std::pair{same_arc ? at_p : std::numbers::pi - at_p, tangency};
  };

  auto [value, tangency] = evaluate(roots.front());
  if (roots.size() > 1 && std::abs(std::abs(roots[1]) - std::abs(roots[0])) <= tol.root_tol) {
    // Tie: both roots give the same angle by symmetry; keep the larger one.
    const auto other = evaluate(roots[1]);
    if (other.first > value) std::tie(value, tangency) = other;
  }

  VamResult out;
  out.value = value;
  out.extremal_point = tangency;
  out.route = Route::quadratic;
  out.diagnostics["t"] = roots.front();
  out.diagnostics["discriminant"] = disc;
  out.diagnostics["discriminant_rel_error"] = std::abs(disc - disc_closed) / disc_closed;
  return out;
}

/// Selects the applicable route: coincident, then collinear with 0, then
/// equal modulus, then the general orthocircle route. With `cross_check` the
/// diagnostics carry every other applicable route's value and the largest
/// pairwise discrepancy.
inline VamResult vam(Point a, Point b, const ToleranceConfig& tol = {}, bool cross_check = false) {
  detail::require_in_disk(a, "a");
  detail::require_in_disk(b, "b");
  if (std::abs(a - b) <= tol.eq_tol * detail::scale_of(a, b)) return VamResult{};

  VamResult out;
  if (detail::collinear_with_origin(a, b, tol)) {
    out = vam_radial(a, b, tol);
  } else if (detail::equal_modulus(a, b, tol)) {
    out = vam_equal_modulus(a, b, tol);
  } else {
    out = vam_orthocircle(a, b, tol);
  }

  if (cross_check) {
    double lo = out.value;
    double hi = out.value;
    for (auto route_fn : {&vam_via_rho, &vam_hmid, &vam_quadratic}) {
      const VamResult other = route_fn(a, b, tol);
      out.diagnostics["route_" + std::string(to_string(other.route))] = other.value;
      lo = std::min(lo, other.value);
      hi = std::max(hi, other.value);
    }
    out.diagnostics["max_discrepancy"] = hi - lo;
  }
  return out;
}

struct VamBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// (1+|m|) th(rho/4) <= tan(v/2) <= min{(1+|m|)/2 sh(rho/2), sqrt((1+|m|)/(1-|m|)) th(rho/4)}.
inline VamBounds vam_bounds(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_pair(a, b, tol);
  const double m = std::abs(chord_midpoint(a, b, tol));
  const double u = sinh_half_rho(a, b);
  const double th4 = u / (1.0 + std::sqrt(1.0 + u * u));
  return {(1.0 + m) * th4, std::min(0.5 * (1.0 + m) * u, std::sqrt((1.0 + m) / (1.0 - m)) * th4)};
}

}  // namespace diskmetrics
