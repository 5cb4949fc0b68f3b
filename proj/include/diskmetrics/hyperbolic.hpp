#pragma once

// Hyperbolic geometry of the unit disk: the metric, the automorphisms T_a,
// geodesic endpoints, the Ahlfors bracket and the two midpoints (hyperbolic
// and Euclidean chord midpoint).

#include <cmath>
#include <complex>
#include <utility>
#include <variant>

#include "diskmetrics/geom_core.hpp"
#include "diskmetrics/types.hpp"

namespace diskmetrics {

/// sh(rho/2) = |a-b| / sqrt((1-|a|^2)(1-|b|^2)).
inline double sinh_half_rho(Point a, Point b) {
  detail::require_in_disk(a, "a");
  detail::require_in_disk(b, "b");
  return std::abs(a - b) / std::sqrt(detail::one_minus_norm(a) * detail::one_minus_norm(b));
}

/// Hyperbolic distance in the unit disk.
inline double rho(Point a, Point b) { return 2.0 * std::asinh(sinh_half_rho(a, b)); }

/// th(rho/2) = |a-b| / A[a,b].
inline double tanh_half_rho(Point a, Point b) {
  const double u = sinh_half_rho(a, b);
  return u / std::sqrt(1.0 + u * u);
}

/// T_a(z) = (z - a) / (1 - conj(a) z). T_0 is the identity.
inline Point mobius_Ta(Point a, Point z, const ToleranceConfig& tol = {}) {
  detail::require_in_disk(a, "a");
  const Point den = 1.0 - std::conj(a) * z;
  if (std::abs(den) < tol.eq_tol) throw Error(ErrorKind::PoleInput, "z is the pole of T_a");
  return (z - a) / den;
}

/// Absolute cross-ratio |a,b,c,d| = |a-c||b-d| / (|a-b||c-d|).
inline double cross_ratio(Point a, Point b, Point c, Point d, const ToleranceConfig& tol = {}) {
  const double ab = std::abs(a - b);
  const double cd = std::abs(c - d);
  if (ab <= tol.eq_tol * detail::scale_of(a, b) || cd <= tol.eq_tol * detail::scale_of(c, d)) {
    throw Error(ErrorKind::DegenerateQuadruple, "coincident pair in the denominator");
  }
  return std::abs(a - c) * std::abs(b - d) / (ab * cd);
}

/// Endpoints (ep(a,b), ep(b,a)) of the hyperbolic line through a and b, with
/// ep(a,b) = T_{-b}(T_b(a) / |T_b(a)|). The order along the geodesic is
/// ep(a,b), a, b, ep(b,a).
inline std::pair<Point, Point> geodesic_endpoints(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_in_disk(a, "a");
  detail::require_in_disk(b, "b");
  if (std::abs(a - b) <= tol.eq_tol * detail::scale_of(a, b)) {
    throw Error(ErrorKind::CoincidentPoints, "geodesic through coincident points");
  }
  auto endpoint = [&](Point from, Point base) {
    const Point t = mobius_Ta(base, from, tol);
    return mobius_Ta(-base, t / std::abs(t), tol);
  };
  return {endpoint(a, b), endpoint(b, a)};
}

/// Ahlfors bracket A[a,b] = |1 - a conj(b)|.
inline double ahlfors_bracket(Point a, Point b) { return std::abs(1.0 - a * std::conj(b)); }

/// The same bracket as sqrt(|a-b|^2 + (1-|a|^2)(1-|b|^2)).
inline double ahlfors_bracket_sqrt(Point a, Point b) {
  return std::sqrt(std::norm(a - b) + detail::one_minus_norm(a) * detail::one_minus_norm(b));
}

/// Point z on the geodesic with rho(a,z) = rho(z,b) = rho(a,b)/2.
inline Point hyperbolic_midpoint(Point a, Point b) {
  detail::require_in_disk(a, "a");
  detail::require_in_disk(b, "b");
  const double ia = detail::one_minus_norm(a);
  const double ib = detail::one_minus_norm(b);
  const Point num = b * ia + a * ib;
  const double den = 1.0 - std::norm(a) * std::norm(b) + ahlfors_bracket(a, b) * std::sqrt(ia * ib);
  return num / den;
}

/// Foot of the perpendicular from 0 to L[a,b]:
/// m = (conj(a) b - a conj(b)) / (2 (conj(a) - conj(b))).
inline Point chord_midpoint(Point a, Point b, const ToleranceConfig& tol = {}) {
  detail::require_finite(a, "a");
  detail::require_finite(b, "b");
  if (std::abs(a - b) <= tol.eq_tol * detail::scale_of(a, b)) {
    throw Error(ErrorKind::CoincidentPoints, "chord through coincident points");
  }
  return (std::conj(a) * b - a * std::conj(b)) / (2.0 * std::conj(a - b));
}

// Self-maps of the disk used by the Schwarz-lemma checks.

struct IdentityMap {};

struct MobiusMap {
  Point a;
};

struct InversionMap {
  Point c;
};

/// z -> z |z|^(1/K - 1); K-quasiconformal, maps radii r -> r^(1/K).
struct RadialStretch {
  double K;
};

class DiskAutomorphism {
 public:
  using Kind = std::variant<IdentityMap, MobiusMap, InversionMap, RadialStretch>;

  static DiskAutomorphism identity() { return DiskAutomorphism(IdentityMap{}); }

  static DiskAutomorphism mobius(Point a) {
    detail::require_in_disk(a, "a");
    return DiskAutomorphism(MobiusMap{a});
  }

  static DiskAutomorphism inversion(Point c) {
    detail::require_finite(c, "c");
    if (!(std::abs(c) > 1.0)) throw Error(ErrorKind::DomainError, "inversion center must satisfy |c| > 1");
    return DiskAutomorphism(InversionMap{c});
  }

  static DiskAutomorphism radial_stretch(double K) {
    if (!(K >= 1.0) || !std::isfinite(K)) throw Error(ErrorKind::DomainError, "radial stretch needs K >= 1");
    return DiskAutomorphism(RadialStretch{K});
  }

  [[nodiscard]] const Kind& kind() const { return kind_; }

  /// Quasiconformality constant of the map (1 for the conformal kinds).
  [[nodiscard]] double dilatation() const {
    if (const auto* s = std::get_if<RadialStretch>(&kind_)) return s->K;
    return 1.0;
  }

  [[nodiscard]] Point apply(Point z, const ToleranceConfig& tol = {}) const {
    detail::require_in_disk(z, "z");
    return std::visit(
        [&](const auto& k) -> Point {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, IdentityMap>) {
            return z;
          } else if constexpr (std::is_same_v<T, MobiusMap>) {
            return mobius_Ta(k.a, z, tol);
          } else if constexpr (std::is_same_v<T, InversionMap>) {
            return apply_inversion(k.c, z, tol);
          } else {
            const double r = std::abs(z);
            if (r == 0.0) return z;
            return z * std::pow(r, 1.0 / k.K - 1.0);
          }
        },
        kind_);
  }

 private:
  explicit DiskAutomorphism(Kind kind) : kind_(kind) {}

  Kind kind_;
};

inline Point apply_automorphism(const DiskAutomorphism& f, Point z, const ToleranceConfig& tol = {}) {
  return f.apply(z, tol);
}

}  // namespace diskmetrics
