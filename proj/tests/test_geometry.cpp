#include <cmath>

#include <doctest.h>

#include "shadowlab/geometry.hpp"

using namespace shadowlab;

TEST_CASE("reduce_angle maps into [0, 2*pi)") {
  CHECK(reduce_angle(0.0) == 0.0);
  CHECK(reduce_angle(kTwoPi) == 0.0);
  CHECK(reduce_angle(-kPi / 2) == doctest::Approx(1.5 * kPi).epsilon(1e-15));
  CHECK(reduce_angle(5 * kTwoPi + 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(reduce_angle(-1e-300) >= 0.0);
  CHECK(reduce_angle(-1e-300) < kTwoPi);
}

TEST_CASE("polar_to_cartesian examples") {
  const PlanePoint center = polar_to_cartesian({0.0, 1.3});
  CHECK(center.x == 0.0);
  CHECK(center.y == 0.0);

  const PlanePoint axis = polar_to_cartesian({1.0, 0.0});
  CHECK(axis.x == 1.0);
  CHECK(axis.y == 0.0);

  const PlanePoint up = polar_to_cartesian({0.5, kPi / 2});
  CHECK(std::abs(up.x) < 1e-15);
  CHECK(up.y == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(polar_to_cartesian({1.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(polar_to_cartesian({-0.1, 0.0}), std::domain_error);
}

TEST_CASE("cartesian_to_polar examples and domain") {
  const PolarPoint center = cartesian_to_polar({0.0, 0.0});
  CHECK(center.rho == 0.0);
  CHECK(center.phi == 0.0);

  const PolarPoint left = cartesian_to_polar({-1.0, 0.0});
  CHECK(left.rho == 1.0);
  CHECK(left.phi == doctest::Approx(kPi).epsilon(1e-15));

  const PolarPoint p = cartesian_to_polar({0.3, 0.4});
  CHECK(p.rho == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.phi == doctest::Approx(std::atan2(0.4, 0.3)).epsilon(1e-15));

  CHECK_THROWS_AS(cartesian_to_polar({1.1, 0.0}), std::domain_error);
}

TEST_CASE("polar round trip is the identity for rho > 0") {
  RandomEngine eng({17, 0});
  for (int i = 0; i < 2000; ++i) {
    const PolarPoint p{0.001 + 0.999 * eng.next_unit(), kTwoPi * eng.next_unit()};
    const PolarPoint back = cartesian_to_polar(polar_to_cartesian(p));
    CHECK(back.rho == doctest::Approx(p.rho).epsilon(1e-12));
    CHECK(std::abs(reduce_angle(back.phi - p.phi + kPi) - kPi) < 1e-12);
  }
}

TEST_CASE("disk transform examples") {
  const PlanePoint origin = disk_point_from_uniforms(0.0, 0.0);
  CHECK(origin.x == 0.0);
  CHECK(origin.y == 0.0);

  const PlanePoint edge = disk_point_from_uniforms(1.0, 0.0);
  CHECK(edge.x == 1.0);
  CHECK(edge.y == 0.0);

  // r = sqrt(0.25) = 0.5, angle = pi
  const PlanePoint half = disk_point_from_uniforms(0.25, 0.5);
  CHECK(half.x == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(std::abs(half.y) < 1e-15);

  CHECK_THROWS_AS(disk_point_from_uniforms(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(disk_point_from_uniforms(0.5, 1.5), std::domain_error);
}

TEST_CASE("uniform disk sampling puts mass r^2 in the centered sub-disk") {
  const std::uint64_t n = 100000;
  for (const double r : {0.3, 0.6, 0.9}) {
    RandomEngine eng({99, static_cast<std::uint64_t>(r * 10)});
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const PlanePoint p = sample_uniform_disk(eng);
      CHECK(squared_norm(p) <= 1.0 + 1e-12);
      if (squared_norm(p) <= r * r) ++hits;
    }
    const double target = r * r;
    const double se = std::sqrt(target * (1.0 - target) / static_cast<double>(n));
    CHECK(std::abs(static_cast<double>(hits) / static_cast<double>(n) - target) <= 4.0 * se);
  }
}

TEST_CASE("cast_shadow examples") {
  CHECK(cast_shadow({0.0, 0.0}, {0.3, 0.0}) == 0.0);

  // vertical ray from (0.5, 0.25) exits at (0.5, sqrt(3)/2)
  const double theta = cast_shadow({0.5, 0.0}, {0.5, 0.25});
  CHECK(theta == doctest::Approx(kPi / 3).epsilon(1e-12));

  CHECK_THROWS_AS(cast_shadow({0.0, 0.0}, {0.0, 0.0}), DegenerateRayError);
  CHECK_THROWS_AS(cast_shadow({0.2, 0.1}, {0.2, 0.1}), DegenerateRayError);
  CHECK_THROWS_AS(cast_shadow({1.5, 0.0}, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(cast_shadow({0.0, 0.0}, {1.5, 0.0}), std::domain_error);
}

TEST_CASE("shadow lands on the circle, beyond the dart") {
  RandomEngine eng({4242, 1});
  for (int i = 0; i < 5000; ++i) {
    // every fifth source sits exactly on the boundary
    PlanePoint mu = sample_uniform_disk(eng);
    if (i % 5 == 0) {
      const double scale = norm(mu);
      if (scale > 0.1) mu = {mu.x / scale, mu.y / scale};
    }
    const PlanePoint u = sample_uniform_disk(eng);
    if (distance(u, mu) < 1e-12) continue;
    const double theta = cast_shadow(mu, u);
    const PlanePoint shadow = boundary_point(theta);
    CHECK(std::abs(squared_norm(shadow) - 1.0) <= 1e-12);
    // the shadow is at least as far from the source as the dart
    const double t = distance(shadow, mu) / distance(u, mu);
    CHECK(t >= 1.0 - 1e-12);
  }
}

TEST_CASE("boundary source is accepted") {
  const double theta = cast_shadow({1.0, 0.0}, {0.0, 0.0});
  CHECK(theta == doctest::Approx(kPi).epsilon(1e-12));
}
