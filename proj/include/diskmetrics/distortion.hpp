#pragma once

// Special functions behind the quasiregular Schwarz lemma: the complete
// elliptic integral K, the Grötzsch ring modulus mu, its inverse and the
// Hersch-Pfluger distortion phi_K(r) = mu^{-1}(mu(r)/K).

#include <cmath>
#include <numbers>
#include <utility>

#include "diskmetrics/hyperbolic.hpp"
#include "diskmetrics/types.hpp"
#include "diskmetrics/vam.hpp"

namespace diskmetrics {

struct DistortionContext {
  double agm_tol = 1e-15;
  double inverse_tol = 1e-14;
  int max_iter = 200;

  [[nodiscard]] bool valid() const { return agm_tol > 0 && inverse_tol > 0 && max_iter >= 1; }
};

/// Arithmetic-geometric mean of two nonnegative numbers.
inline double agm(double x, double y, const DistortionContext& ctx = {}) {
  if (x < 0 || y < 0) throw Error(ErrorKind::DomainError, "agm of a negative number");
  if (x == 0.0 || y == 0.0) return 0.0;
  for (int i = 0; i < ctx.max_iter; ++i) {
    if (std::abs(x - y) <= ctx.agm_tol * x) return 0.5 * (x + y);
    const double next = 0.5 * (x + y);
    y = std::sqrt(x * y);
    x = next;
  }
  throw Error(ErrorKind::ConvergenceFailure, "agm did not converge");
}

namespace detail {

/// sqrt(1 - r^2) for r in [0, 1].
inline double complement(double r) { return std::sqrt((1.0 - r) * (1.0 + r)); }

/// A modulus r together with its complement r' = sqrt(1 - r^2), both
/// carried at full relative precision.
struct ModulusPair {
  double r;
  double rc;
};

}  // namespace detail

/// K(r) = pi / (2 AGM(1, sqrt(1 - r^2))), 0 <= r < 1.
inline double elliptic_K(double r, const DistortionContext& ctx = {}) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::DomainError, "elliptic_K needs 0 <= r < 1");
  return std::numbers::pi / (2.0 * agm(1.0, detail::complement(r), ctx));
}

namespace detail {

/// mu written in terms of (r, r'), so that neither end of (0,1) loses
/// precision: mu = (pi/2) K(r')/K(r) = (pi/2) AGM(1, r') / AGM(1, r).
inline double mu_pair(double r, double rc, const DistortionContext& ctx) {
  return 0.5 * std::numbers::pi * agm(1.0, rc, ctx) / agm(1.0, r, ctx);
}

/// Solves mu(r) = y for y >= pi/2 by bisection in log r over the bracket
/// exp(-y) < r < 4 exp(-y), which holds because log(1/r) < mu(r) < log(4/r).
inline ModulusPair mu_inverse_upper(double y, const DistortionContext& ctx) {
  double lo = -y;
  double hi = std::min(std::log(4.0) - y, std::log(std::numbers::sqrt2 / 2.0));
  for (int i = 0; i < ctx.max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi || hi - lo <= ctx.inverse_tol * 1e-2) {
      const double r = std::exp(mid);
      return {r, complement(r)};
    }
    const double r = std::exp(mid);
    // mu is decreasing in r.
    if (mu_pair(r, complement(r), ctx) > y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw Error(ErrorKind::ConvergenceFailure, "mu_inverse exceeded max_iter");
}

inline ModulusPair mu_inverse_pair(double y, const DistortionContext& ctx) {
  if (!(y > 0.0) || !std::isfinite(y)) throw Error(ErrorKind::DomainError, "mu_inverse needs y > 0");
  constexpr double half_pi = 0.5 * std::numbers::pi;
  if (y >= half_pi) return mu_inverse_upper(y, ctx);
  // mu(r) mu(r') = pi^2/4 swaps the roles of r and r'.
  const ModulusPair swapped = mu_inverse_upper(half_pi * half_pi / y, ctx);
  return {swapped.rc, swapped.r};
}

}  // namespace detail

/// Grötzsch modulus mu(r) = (pi/2) K(sqrt(1-r^2)) / K(r), decreasing on (0,1).
inline double mu(double r, const DistortionContext& ctx = {}) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::DomainError, "mu needs 0 < r < 1");
  return detail::mu_pair(r, detail::complement(r), ctx);
}

inline double mu_inverse(double y, const DistortionContext& ctx = {}) { return detail::mu_inverse_pair(y, ctx).r; }

namespace detail {

inline ModulusPair phi_K_pair(double K, double r, const DistortionContext& ctx) {
  if (!(K > 0.0) || !std::isfinite(K)) throw Error(ErrorKind::DomainError, "phi_K needs K > 0");
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::DomainError, "phi_K needs 0 <= r <= 1");
  if (r == 0.0) return {0.0, 1.0};
  if (r == 1.0) return {1.0, 0.0};
  if (K == 1.0) return {r, complement(r)};
  return mu_inverse_pair(mu(r, ctx) / K, ctx);
}

}  // namespace detail

/// Hersch-Pfluger distortion phi_K(r) = mu^{-1}(mu(r)/K), extended by
/// phi_K(0) = 0 and phi_K(1) = 1. Any K > 0 is accepted; phi_{1/K} inverts phi_K.
inline double phi_K(double K, double r, const DistortionContext& ctx = {}) {
  return detail::phi_K_pair(K, r, ctx).r;
}

/// |LHS - RHS| of
///   phi_K(r) / (1 + sqrt(1 - phi_K(r)^2)) = sqrt(phi_K((r / (1 + sqrt(1 - r^2)))^2)).
inline double slem2_identity_residual(double K, double r, const DistortionContext& ctx = {}) {
  if (!(K >= 1.0)) throw Error(ErrorKind::DomainError, "identity stated for K >= 1");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::DomainError, "identity stated for 0 < r < 1");
  const detail::ModulusPair phi = detail::phi_K_pair(K, r, ctx);
  const double lhs = phi.r / (1.0 + phi.rc);
  const double half = r / (1.0 + detail::complement(r));
  const double rhs = std::sqrt(phi_K(K, half * half, ctx));
  return std::abs(lhs - rhs);
}

struct SchwarzRhoBound {
  double tight = 0.0;  // phi_K(th(rho/2))
  double weak = 0.0;   // 4^{1-1/K} th(rho/2)^{1/K}
};

/// Upper bounds for th(rho(f(a), f(b))/2) given rho(a, b), for K-quasiregular
/// self-maps f of the disk.
inline SchwarzRhoBound schwarz_rho_bound(double K, double rho_ab, const DistortionContext& ctx = {}) {
  if (!(K >= 1.0) || !std::isfinite(K)) throw Error(ErrorKind::DomainError, "schwarz bound needs K >= 1");
  if (!(rho_ab >= 0.0)) throw Error(ErrorKind::DomainError, "schwarz bound needs rho >= 0");
  const double t = std::tanh(0.5 * rho_ab);
  return {phi_K(K, t, ctx), std::pow(4.0, 1.0 - 1.0 / K) * std::pow(t, 1.0 / K)};
}

struct SchwarzVamBound {
  double lhs = 0.0;  // tan(v(f(a), f(b)) / 2)
  double rhs = 0.0;  // 2^{1-1/K} c tan(v(a,b)/2)^{1/K}
};

/// Both sides of the visual angle Schwarz lemma
///   tan(v(fa,fb)/2) <= 2^{1-1/K} c tan(v(a,b)/2)^{1/K},
///   c = sqrt((1+|m1|)/(1-|m1|)) / (1+|m2|)^{1/K},
/// with m1, m2 the chord midpoints of (fa, fb) and (a, b).
inline SchwarzVamBound main3_bound(Point a, Point b, Point fa, Point fb, double K, const ToleranceConfig& tol = {}) {
  if (!(K >= 1.0) || !std::isfinite(K)) throw Error(ErrorKind::DomainError, "Schwarz lemma needs K >= 1");
  const double lhs = std::tan(0.5 * vam(fa, fb, tol).value);
  const double m1 = std::abs(chord_midpoint(fa, fb, tol));
  const double m2 = std::abs(chord_midpoint(a, b, tol));
  const double c = std::sqrt((1.0 + m1) / (1.0 - m1)) / std::pow(1.0 + m2, 1.0 / K);
  const double rhs = std::pow(2.0, 1.0 - 1.0 / K) * c * std::pow(std::tan(0.5 * vam(a, b, tol).value), 1.0 / K);
  return {lhs, rhs};
}

}  // namespace diskmetrics
