#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "diskmetrics/hyperbolic.hpp"
#include "diskmetrics/oracle.hpp"

using namespace diskmetrics;

namespace {

const Point I(0.0, 1.0);

void expect_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Rho, FrozenExample) {
  EXPECT_NEAR(sinh_half_rho(0.3, 0.6 * I), 0.87901355800967886, 1e-14);
  EXPECT_NEAR(rho(0.3, 0.6 * I), 1.5863724661869796, 1e-13);
  EXPECT_NEAR(rho(0, 0.5), std::log(3.0), 1e-15);
  EXPECT_EQ(rho(0.4 * I, 0.4 * I), 0.0);
}

TEST(Rho, TanhForm) {
  SeedStream s(21);
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = random_pair(s);
    EXPECT_NEAR(tanh_half_rho(a, b), std::abs(a - b) / ahlfors_bracket(a, b), 1e-13);
    EXPECT_NEAR(tanh_half_rho(a, b), std::tanh(0.5 * rho(a, b)), 1e-13);
  }
}

TEST(Rho, OutsideDiskRejected) {
  expect_kind(ErrorKind::OutsideDisk, [] { rho(1.0, 0.2); });
  expect_kind(ErrorKind::OutsideDisk, [] { rho(0.2, Point(0.8, 0.8)); });
  expect_kind(ErrorKind::DomainError, [] { rho(0.2, Point(NAN, 0)); });
}

TEST(MobiusTa, MapsAToZeroAndInverse) {
  SeedStream s(22);
  for (int i = 0; i < 500; ++i) {
    const Point a = random_disk_point(s, 0.95);
    const Point z = random_disk_point(s, 0.95);
    EXPECT_NEAR(std::abs(mobius_Ta(a, a)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(mobius_Ta(-a, mobius_Ta(a, z)) - z), 0.0, 1e-13);
    const Point w = std::polar(1.0, s.uniform(0, 6.28));
    EXPECT_NEAR(std::abs(mobius_Ta(a, w)), 1.0, 1e-13);
  }
  EXPECT_EQ(mobius_Ta(0, Point(0.3, 0.2)), Point(0.3, 0.2));
  expect_kind(ErrorKind::PoleInput, [] { mobius_Ta(0.5, 2.0); });
}

TEST(MobiusTa, RhoInvariance) {
  SeedStream s(23);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = random_pair(s);
    const Point w = random_disk_point(s, 0.95);
    const double r = rho(a, b);
    EXPECT_NEAR(rho(mobius_Ta(w, a), mobius_Ta(w, b)) / r, 1.0, 1e-11);
  }
}

TEST(CrossRatio, ExampleAndErrors) {
  EXPECT_NEAR(cross_ratio(0, 1, 2, 3), 2.0 * 2.0 / (1.0 * 1.0), 1e-15);
  expect_kind(ErrorKind::DegenerateQuadruple, [] { cross_ratio(0.1, 0.1, 0.2, 0.3); });
  expect_kind(ErrorKind::DegenerateQuadruple, [] { cross_ratio(0.1, 0.2, 0.3, 0.3); });
}

TEST(GeodesicEndpoints, RadialCase) {
  const auto [e1, e2] = geodesic_endpoints(0.2, 0.6);
  EXPECT_NEAR(std::abs(e1 + 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e2 - 1.0), 0.0, 1e-14);
  // Zero extension of the endpoint formula.
  const auto [f1, f2] = geodesic_endpoints(0.5 * I, 0);
  EXPECT_NEAR(std::abs(f1 - I), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(f2 + I), 0.0, 1e-14);
  expect_kind(ErrorKind::CoincidentPoints, [] { geodesic_endpoints(0.3, 0.3); });
}

TEST(GeodesicEndpoints, OnCircleAndLogCrossRatio) {
  SeedStream s(24);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = random_pair(s);
    const auto [ea, eb] = geodesic_endpoints(a, b);
    EXPECT_NEAR(std::abs(ea), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(eb), 1.0, 1e-12);
    EXPECT_NEAR(std::log(cross_ratio(ea, a, b, eb)), rho(a, b), 1e-10);
    // ea is on the a side.
    EXPECT_LT(std::abs(ea - a), std::abs(ea - b));
  }
}

TEST(AhlforsBracket, TwoFormsAgree) {
  EXPECT_NEAR(ahlfors_bracket(0.3, 0.6 * I), 1.016070863670443, 1e-14);
  SeedStream s(25);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = random_pair(s);
    EXPECT_NEAR(ahlfors_bracket(a, b), ahlfors_bracket_sqrt(a, b), 1e-14);
  }
}

TEST(HyperbolicMidpoint, FrozenExample) {
  const Point m = hyperbolic_midpoint(0.3, 0.6 * I);
  EXPECT_NEAR(m.real(), 0.11015390285180186, 1e-13);
  EXPECT_NEAR(m.imag(), 0.31325016123481154, 1e-13);
  EXPECT_NEAR(std::abs(hyperbolic_midpoint(-0.5, 0.5)), 0.0, 1e-15);
}

TEST(HyperbolicMidpoint, EqualHalves) {
  SeedStream s(26);
  for (int i = 0; i < 2000; ++i) {
    const auto [a, b] = random_pair(s);
    const Point z = hyperbolic_midpoint(a, b);
    const double r = rho(a, b);
    EXPECT_NEAR(rho(a, z), rho(z, b), 1e-10);
    EXPECT_NEAR(rho(a, z), 0.5 * r, 1e-10);
  }
}

TEST(ChordMidpoint, FootOfPerpendicular) {
  const Point m = chord_midpoint(0.3, 0.6 * I);
  EXPECT_NEAR(std::abs(m - Point(0.24, 0.12)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(chord_midpoint(0.2, 0.7)), 0.0, 1e-15);
  expect_kind(ErrorKind::CoincidentPoints, [] { chord_midpoint(0.2, 0.2); });

  SeedStream s(27);
  for (int i = 0; i < 500; ++i) {
    const auto [a, b] = random_pair(s);
    const Point c = chord_midpoint(a, b);
    // On the line and perpendicular to it.
    EXPECT_NEAR((std::conj(b - a) * (c - a)).imag(), 0.0, 1e-14);
    EXPECT_NEAR((std::conj(b - a) * c).real(), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(c), origin_line_distance(a, b), 1e-14);
  }
}

TEST(DiskAutomorphism, FactoriesValidate) {
  expect_kind(ErrorKind::DomainError, [] { DiskAutomorphism::radial_stretch(0.5); });
  expect_kind(ErrorKind::DomainError, [] { DiskAutomorphism::inversion(0.9); });
  expect_kind(ErrorKind::OutsideDisk, [] { DiskAutomorphism::mobius(1.0); });
  EXPECT_EQ(DiskAutomorphism::radial_stretch(2.0).dilatation(), 2.0);
  EXPECT_EQ(DiskAutomorphism::mobius(0.1).dilatation(), 1.0);
}

TEST(DiskAutomorphism, ApplyEachKind) {
  const Point z(0.3, -0.4);
  EXPECT_EQ(DiskAutomorphism::identity().apply(z), z);
  EXPECT_EQ(apply_automorphism(DiskAutomorphism::mobius(0.2), z), mobius_Ta(0.2, z));
  const Point c = inversion_center(0.3, 0.6 * I);
  EXPECT_NEAR(std::abs(DiskAutomorphism::inversion(c).apply(0.3) - 0.6 * I), 0.0, 1e-12);
  // Radial stretch sends modulus r to r^(1/K) and keeps the argument.
  const Point w = DiskAutomorphism::radial_stretch(2.0).apply(z);
  EXPECT_NEAR(std::abs(w), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(std::arg(w), std::arg(z), 1e-15);
  EXPECT_EQ(DiskAutomorphism::radial_stretch(3.0).apply(0), Point(0));
}
