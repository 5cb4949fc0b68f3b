#pragma once

// Seeded invariant sweeps run by `diskmetrics selftest`. Each suite reports
// its worst residual against a fixed limit; only the route-agreement limit
// follows --tol.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "diskmetrics/diskmetrics.hpp"

namespace diskmetrics::selftest {

/// Relative rounding allowance for inequalities that are sharp (equality
/// cases are reached to within a few ulps).
inline constexpr double kInequalitySlack = 1e-12;

struct SuiteResult {
  std::string name;
  double worst = 0.0;
  double limit = 0.0;
  bool passed = false;
};

namespace detail {

inline SuiteResult finish(std::string name, double worst, double limit) {
  return {std::move(name), worst, limit, std::isfinite(worst) && worst <= limit};
}

/// Max over i of f(i), evaluated in parallel; f returns a residual >= 0.
template <typename F>
double worst_over(int n, F&& f) {
  std::vector<double> r(static_cast<std::size_t>(n));
  parallel_for(r.size(), [&](std::size_t i) { r[i] = f(i); });
  double w = 0.0;
  for (double x : r) w = std::isnan(x) ? x : std::max(w, x);
  return w;
}

inline double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }

}  // namespace detail

inline std::vector<SuiteResult> run_all(int samples, std::uint64_t seed, double tol) {
  using detail::worst_over;
  const ToleranceConfig cfg;
  const SeedStream root(seed);
  std::vector<SuiteResult> out;

  auto pair_at = [&](std::uint64_t suite, std::size_t i) {
    SeedStream s = root.split(suite).split(i);
    return random_pair(s);
  };

  out.push_back(detail::finish("route_agreement", worst_over(samples, [&](std::size_t i) {
    const auto [a, b] = pair_at(1, i);
    const double v[] = {vam_orthocircle(a, b).value, vam_via_rho(a, b).value, vam_hmid(a, b).value,
                        vam_quadratic(a, b).value};
    const auto [lo, hi] = std::minmax_element(std::begin(v), std::end(v));
    return (*hi - *lo) / *hi;
  }), tol));

  out.push_back(detail::finish("oracle_agreement", worst_over(samples, [&](std::size_t i) {
    const auto [a, b] = pair_at(1, i);
    return std::abs(vam(a, b).value - vam_bruteforce(a, b).value);
  }), cfg.oracle_tol));

  out.push_back(detail::finish("radial_forms", worst_over(samples, [&](std::size_t i) {
    SeedStream s = root.split(2).split(i);
    const Point dir = std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi));
    const double r = s.uniform(-0.95, 0.95);
    double t = s.uniform(-0.95, 0.95);
    if (std::abs(t - r) < 1e-3) t = r + (r < 0 ? 1e-3 : -1e-3);
    const Point a = r * dir;
    const Point b = t * dir;
    const VamResult rad = vam_radial(a, b);
    const double via = vam_via_rho(a, b).value;
    return std::max({std::abs(rad.diagnostics.at("arcsin_form") - rad.value), std::abs(via - rad.value),
                     std::abs(std::tan(rad.value) - sinh_half_rho(a, b)) / sinh_half_rho(a, b)});
  }), 1e-12));

  out.push_back(detail::finish("equal_modulus_oracle", worst_over(samples, [&](std::size_t i) {
    SeedStream s = root.split(3).split(i);
    const double r = s.uniform(0.01, 0.95);
    const double t1 = s.uniform(0.0, 2.0 * std::numbers::pi);
    const double t2 = t1 + s.uniform(0.01, 2.0 * std::numbers::pi - 0.01);
    const Point a = std::polar(r, t1);
    const Point b = std::polar(r, t2);
    return std::abs(vam_equal_modulus(a, b).value - vam_bruteforce(a, b).value);
  }), cfg.oracle_tol));

  out.push_back(detail::finish("extremal_certificates", worst_over(samples, [&](std::size_t i) {
    const auto [a, b] = pair_at(1, i);
    const VamResult r = vam_orthocircle(a, b);
    const Point z = *r.extremal_point;
    const Point u = orthocircle_chord_point(a, b);
    // Each residual scaled by its own limit so one number covers all four.
    return std::max({std::abs(std::abs(z) - 1.0) / 1e-12, std::abs(angle_at(z, a, b) - r.value) / 1e-10,
                     std::max(r.diagnostics.at("residual_z1"), r.diagnostics.at("residual_z2")) / 1e-10,
                     std::abs(angle_at(z, a, u) - angle_at(z, u, b)) / 1e-9});
  }), 1.0));

  out.push_back(detail::finish("bounds_containment", worst_over(samples, [&](std::size_t i) {
    const auto [a, b] = pair_at(1, i);
    const VamBounds bd = vam_bounds(a, b);
    const double t = std::tan(0.5 * vam(a, b).value);
    return std::max({0.0, bd.lower - t * (1.0 + kInequalitySlack), t - bd.upper * (1.0 + kInequalitySlack)});
  }), 0.0));

  const double kinds[] = {1.0, 1.5, 2.0, 4.0};
  for (double K : kinds) {
    const std::string map = K == 1.0 ? "mobius" : "stretch";
    out.push_back(detail::finish("schwarz_" + map + "_K" + std::to_string(K).substr(0, 3),
                                 worst_over(samples, [&](std::size_t i) {
      SeedStream s = root.split(4).split(i);
      const auto [a, b] = random_pair(s);
      const DiskAutomorphism f =
          K == 1.0 ? DiskAutomorphism::mobius(random_disk_point(s, 0.95)) : DiskAutomorphism::radial_stretch(K);
      const SchwarzVamBound bd = main3_bound(a, b, f.apply(a), f.apply(b), K);
      return std::max(0.0, bd.lhs / bd.rhs - 1.0);
    }), kInequalitySlack));
  }

  {
    double worst = 0.0;
    for (int k = 1; k <= 99; ++k) {
      const double r = k / 100.0;
      worst = std::max(worst, std::abs(mu(r) * mu(std::sqrt((1.0 - r) * (1.0 + r))) - std::numbers::pi * std::numbers::pi / 4));
    }
    out.push_back(detail::finish("mu_reciprocal", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int k = 1; k <= 99; ++k) {
      const double r = k / 100.0;
      worst = std::max(worst, std::abs(phi_K(2.0, r) - 2.0 * std::sqrt(r) / (1.0 + r)));
      for (double K : {1.0, 1.5, 2.0, 4.0, 8.0}) {
        if (k % 5 == 0 && k < 100) worst = std::max(worst, slem2_identity_residual(K, r));
      }
    }
    out.push_back(detail::finish("distortion_identities", worst, 1e-10));
  }

  out.push_back(detail::finish("hyperbolic_toolkit", worst_over(samples, [&](std::size_t i) {
    const auto [a, b] = pair_at(5, i);
    SeedStream s = root.split(6).split(i);
    const Point w = random_disk_point(s, 0.95);
    const Point z = hyperbolic_midpoint(a, b);
    const double r = rho(a, b);
    const auto [ea, eb] = geodesic_endpoints(a, b);
    double worst = std::max({std::abs(rho(a, z) - rho(z, b)), std::abs(rho(a, z) - 0.5 * r),
                             std::abs(std::log(cross_ratio(ea, a, b, eb)) - r)});
    worst = std::max(worst, 1e-2 * detail::rel(rho(mobius_Ta(w, a), mobius_Ta(w, b)), r));
    return worst;
  }), 1e-10));

  out.push_back(detail::finish("evenly_separated", worst_over(std::max(1, samples / 100), [&](std::size_t i) {
    SeedStream s = root.split(7).split(i);
    for (;;) {
      const auto [p, q] = random_pair(s);
      const double step = s.uniform(0.05, 0.4);
      std::vector<Point> seq;
      try {
        seq = evenly_separated_sequence(p, q, step, 8);
      } catch (const Error&) {
        continue;
      }
      double lo = 10.0;
      double hi = 0.0;
      for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        const double v = vam(seq[j], seq[j + 1]).value;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return hi - lo;
    }
  }), 1e-10));

  out.push_back(detail::finish("triangle_inequality", worst_over(samples, [&](std::size_t i) {
    SeedStream s = root.split(8).split(i);
    const Point a = random_disk_point(s, 0.95);
    const Point b = random_disk_point(s, 0.95);
    const Point c = random_disk_point(s, 0.95);
    const double asym = std::abs(vam(a, b).value - vam(b, a).value);
    return std::max(asym, vam(a, b).value - vam(a, c).value - vam(c, b).value);
  }), 1e-10));

  return out;
}

}  // namespace diskmetrics::selftest
