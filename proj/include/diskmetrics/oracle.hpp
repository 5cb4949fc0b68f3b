#pragma once

// Brute-force verification machinery: a boundary scan plus golden-section
// refinement of angle(a, e^{i theta}, b), constant-rho point sequences along
// a chord, and a seeded random stream for the property sweeps.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "diskmetrics/geom_core.hpp"
#include "diskmetrics/hyperbolic.hpp"
#include "diskmetrics/types.hpp"

namespace diskmetrics {

/// Counter-based SplitMix64 stream. The i-th draw depends only on (seed, i),
/// and split(k) derives an independent child stream.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t next_u64() { return mix(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  [[nodiscard]] SeedStream split(std::uint64_t k) const {
    SeedStream child(0);
    child.key_ = mix(key_ ^ mix(k + 0xbb67ae8584caa73bULL));
    return child;
  }

  [[nodiscard]] std::uint64_t draws() const { return counter_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Area-uniform point of the disk |z| <= radius.
inline Point random_disk_point(SeedStream& stream, double radius) {
  const double r = radius * std::sqrt(stream.next_unit());
  const double t = 2.0 * std::numbers::pi * stream.next_unit();
  return std::polar(r, t);
}

/// Pair of area-uniform points with |a|, |b| <= max_modulus and
/// |a - b| >= min_separation (closer pairs are redrawn).
inline std::pair<Point, Point> random_pair(SeedStream& stream, double max_modulus = 0.95,
                                           double min_separation = 1e-3) {
  if (!(max_modulus > 0.0 && max_modulus < 1.0)) throw Error(ErrorKind::DomainError, "max_modulus in (0,1)");
  for (;;) {
    const Point a = random_disk_point(stream, max_modulus);
    const Point b = random_disk_point(stream, max_modulus);
    if (std::abs(a - b) >= min_separation) return {a, b};
  }
}

struct GoldenSectionResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  double width = 0.0;
  std::vector<double> widths;  // bracket width after each iteration
};

/// Maximizes a unimodal f on [lo, hi] until the bracket is narrower than
/// `width_tol`.
template <typename F>
GoldenSectionResult golden_section_maximize(F&& f, double lo, double hi, double width_tol, int max_iter = 500) {
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt 5 - 1) / 2
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  GoldenSectionResult out;
  while (hi - lo >= width_tol && out.iterations < max_iter) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    ++out.iterations;
    out.widths.push_back(hi - lo);
  }
  if (f1 >= f2) {
    out.x = x1;
    out.fx = f1;
  } else {
    out.x = x2;
    out.fx = f2;
  }
  out.width = hi - lo;
  return out;
}

struct OracleReport {
  double value = 0.0;
  Point argmax{1.0, 0.0};
  int grid_size = 0;
  int refinement_iterations = 0;
  double bracket_width = 0.0;
};

/// Maximizes theta -> angle(a, e^{i theta}, b) by a uniform scan followed by
/// golden-section refinement of the best bracket in each basin (there are at
/// most two local maxima, one on each side of L[a,b]).
inline OracleReport vam_bruteforce(Point a, Point b, int grid = 4096, const ToleranceConfig& tol = {}) {
  detail::require_in_disk(a, "a");
  detail::require_in_disk(b, "b");
  if (std::abs(a - b) <= tol.eq_tol * detail::scale_of(a, b)) {
    throw Error(ErrorKind::CoincidentPoints, "oracle needs distinct points");
  }
  if (grid < 8) throw Error(ErrorKind::DomainError, "oracle grid too small");

  const double h = 2.0 * std::numbers::pi / grid;
  auto angle = [&](double theta) { return angle_at(std::polar(1.0, theta), a, b, tol); };

  std::vector<double> f(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) f[static_cast<std::size_t>(i)] = angle(i * h);

  auto at = [&](int i) { return f[static_cast<std::size_t>((i % grid + grid) % grid)]; };
  std::vector<int> peaks;
  for (int i = 0; i < grid; ++i) {
    if (at(i) > at(i - 1) && at(i) >= at(i + 1)) peaks.push_back(i);
  }
  if (peaks.empty()) {
    peaks.push_back(static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin()));
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](int x, int y) { return at(x) > at(y); });
  if (peaks.size() > 2) peaks.resize(2);

  OracleReport out;
  out.grid_size = grid;
  out.value = -1.0;
  for (int i : peaks) {
    const GoldenSectionResult g = golden_section_maximize(angle, (i - 1) * h, (i + 1) * h, 1e-12);
    if (g.fx > out.value) {
      out.value = g.fx;
      out.argmax = std::polar(1.0, g.x);
      out.refinement_iterations = g.iterations;
      out.bracket_width = g.width;
    }
  }
  return out;
}

/// Points a_1 = p, a_2, ..., a_n on L[p,q], each one step further from p in
/// the direction of q, with rho(a_j, a_{j+1}) = step.
inline std::vector<Point> evenly_separated_sequence(Point p, Point q, double step, int n,
                                                    const ToleranceConfig& tol = {}) {
  detail::require_in_disk(p, "p");
  detail::require_in_disk(q, "q");
  if (std::abs(p - q) <= tol.eq_tol * detail::scale_of(p, q)) {
    throw Error(ErrorKind::CoincidentPoints, "chord direction needs distinct points");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorKind::DomainError, "step must be positive");
  if (n < 1) throw Error(ErrorKind::DomainError, "sequence length must be positive");

  const Point dir = (q - p) / std::abs(q - p);
  std::vector<Point> seq{p};
  seq.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(seq.size()) < n) {
    const Point a = seq.back();
    // Parameter where the ray a + s dir leaves the disk.
    const double beta = (std::conj(a) * dir).real();
    const double inner = detail::one_minus_norm(a);
    const double disc = std::sqrt(beta * beta + inner);
    double hi = beta >= 0.0 ? inner / (beta + disc) : disc - beta;
    while (hi > 0.0 && !(std::abs(a + hi * dir) < 1.0)) hi = std::nextafter(hi, 0.0);
    if (!(hi > 0.0) || rho(a, a + hi * dir) < step) {
      throw Error(ErrorKind::ChordExhausted, "next point would leave the disk");
    }
    // rho(a, a + s dir) increases strictly in s.
    double lo = 0.0;
    for (;;) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (rho(a, a + mid * dir) < step) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double s = std::abs(rho(a, a + lo * dir) - step) <= std::abs(rho(a, a + hi * dir) - step) ? lo : hi;
    seq.push_back(a + s * dir);
  }
  return seq;
}

}  // namespace diskmetrics
