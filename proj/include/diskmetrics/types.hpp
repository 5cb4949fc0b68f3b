#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diskmetrics {

/// A point of the plane. All modules speak in terms of this type.
using Point = std::complex<double>;

struct Circle {
  Point center{};
  double radius = 0.0;

  /// S(c, r) meets the unit circle at right angles iff r^2 = |c|^2 - 1.
  [[nodiscard]] bool orthogonal_to_unit_circle(double tol = 1e-10) const {
    return std::abs(radius * radius - (std::norm(center) - 1.0)) <= tol * std::max(1.0, std::norm(center));
  }
};

/// Tolerances shared by the branch tests and iterative solvers.
struct ToleranceConfig {
  double eq_tol = 1e-12;      // relative tolerance for equality branches
  double root_tol = 1e-14;    // absolute tolerance for root finding
  double oracle_tol = 1e-6;   // acceptance tolerance against the brute-force oracle

  [[nodiscard]] bool valid() const {
    return eq_tol > 0 && eq_tol < 1 && root_tol > 0 && oracle_tol > 0;
  }
};

enum class ErrorKind {
  DegenerateAngle,
  ParallelLines,
  CollinearPoints,
  DegenerateLine,
  EqualModulus,
  CollinearWithOrigin,
  PoleInput,
  OutsideDisk,
  DegenerateQuadruple,
  CoincidentPoints,
  NotCollinear,
  NotEqualModulus,
  DomainError,
  ConvergenceFailure,
  ChordExhausted,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::EqualModulus: return "EqualModulus";
    case ErrorKind::CollinearWithOrigin: return "CollinearWithOrigin";
    case ErrorKind::PoleInput: return "PoleInput";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::NotEqualModulus: return "NotEqualModulus";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::ChordExhausted: return "ChordExhausted";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

inline bool is_finite(Point z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Point z, const char* name) {
  if (!is_finite(z)) throw Error(ErrorKind::DomainError, std::string(name) + " is not finite");
}

/// 1 - |z|^2 without cancellation for |z| near 1.
inline double one_minus_norm(Point z) {
  const double r = std::abs(z);
  return (1.0 - r) * (1.0 + r);
}

inline double scale_of(Point a, Point b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

inline void require_in_disk(Point z, const char* name) {
  require_finite(z, name);
  if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::OutsideDisk, std::string(name) + " must satisfy |z| < 1");
}

}  // namespace detail
}  // namespace diskmetrics
