#include <doctest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"
#include "hoeckend/error.hpp"
#include "hoeckend/planar.hpp"
#include "hoeckend/shape.hpp"

using namespace hoeckend;
using hoeckend::testing::Gen;

namespace {

bool near(Point2 a, Point2 b, double tol) { return distance(a, b) <= tol; }

// Apex angle measured from coordinates: place the apex at the origin and the
// two equal legs so the base has the requested length, then compare the
// directions of the legs with atan2.
double isoceles_apex_oracle(double leg, double base) {
  const double half = base / 2.0;
  const double drop = std::sqrt(leg * leg - half * half);
  const Point2 left{-half, -drop}, right{half, -drop};
  return std::abs(std::atan2(cross(left, right), dot(left, right)));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("rotate examples") {
  CHECK(near(rotate({1, 0}, {0, 0}, 0.0), {1, 0}, 1e-15));
  CHECK(near(rotate({1, 0}, {0, 0}, kPi / 2), {0, 1}, 1e-15));
  CHECK(near(rotate({2, 0}, {1, 0}, kPi), {0, 0}, 1e-15));
}

TEST_CASE("triangle_angle examples") {
  CHECK(triangle_angle(1, 1, 1) == doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK(triangle_angle(1, 1, 2) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(triangle_angle(1, 1, 0) == doctest::Approx(0.0));

  const double got = triangle_angle(38, 38, 30);
  CHECK(std::abs(got - isoceles_apex_oracle(38, 30)) < 1e-12);
  CHECK(std::abs(got - std::acos(1988.0 / 2888.0)) < 1e-12);
}

TEST_CASE("triangle_angle tolerance band") {
  // inside 1e-9 of flat: clamped
  CHECK(triangle_angle(1, 1, 2.0 + 1e-10) == doctest::Approx(kPi));
  CHECK(kind_of([] { triangle_angle(1, 1, 2.001); }) == ErrorKind::DegenerateTriangle);
  CHECK(kind_of([] { triangle_angle(0, 1, 1); }) == ErrorKind::DegenerateTriangle);
  CHECK(kind_of([] { triangle_angle(5, 1, 1); }) == ErrorKind::DegenerateTriangle);
}

TEST_CASE("Segment2 rejects degenerate input") {
  CHECK(kind_of([] { Segment2({1, 1}, {1, 1}); }) == ErrorKind::InvalidArgument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(kind_of([&] { Segment2({nan, 0}, {1, 1}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { rotate({std::numeric_limits<double>::infinity(), 0}, {0, 0}, 1.0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("Segment2 closest point") {
  const Segment2 s({0, 0}, {10, 0});
  CHECK(s.closest_param({5, 3}) == doctest::Approx(0.5));
  CHECK(s.closest_param({-4, 3}) == 0.0);
  CHECK(s.closest_param({14, -3}) == 1.0);
  CHECK(s.distance_to({14, 3}) == doctest::Approx(5.0));
}

TEST_CASE("segment_shape_distance examples") {
  const ObjectShape c = ObjectShape::circle({0, 0}, 10);
  CHECK(segment_shape_distance(Segment2({10, -20}, {10, 20}), c) == doctest::Approx(5.0));
  CHECK(segment_shape_distance(Segment2({-20, 0}, {20, 0}), c) == doctest::Approx(-5.0));
  CHECK(std::abs(segment_shape_distance(Segment2({5, -20}, {5, 20}), c)) < 1e-12);
}

TEST_CASE("property: rotate preserves pairwise distances") {
  Gen g(101);
  for (int i = 0; i < 500; ++i) {
    const Point2 p{g.uniform(-500, 500), g.uniform(-500, 500)};
    const Point2 q{g.uniform(-500, 500), g.uniform(-500, 500)};
    const Point2 c{g.uniform(-100, 100), g.uniform(-100, 100)};
    const double a = g.uniform(-10, 10);
    const double before = distance(p, q);
    const double after = distance(rotate(p, c, a), rotate(q, c, a));
    CAPTURE(i);
    CHECK(std::abs(after - before) <= 1e-12 * std::max(before, 1.0) * 10);
    CHECK(std::abs(distance(rotate(p, c, a), c) - distance(p, c)) <= 1e-12 * 1000);
  }
}

TEST_CASE("property: law of cosines round trip") {
  Gen g(202);
  for (int i = 0; i < 1000; ++i) {
    const double a = g.uniform(0.1, 100), b = g.uniform(0.1, 100);
    const double c = g.uniform(std::abs(a - b), a + b);
    const double ang = triangle_angle(a, b, c);
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CHECK(ang >= 0.0);
    CHECK(ang <= kPi);
    const double c2 = a * a + b * b - 2 * a * b * std::cos(ang);
    CHECK(hoeckend::testing::rel_err(c2, c * c, 1e-6) <= 1e-10);
  }
}

TEST_CASE("property: segment distance invariant under rigid transforms") {
  Gen g(303);
  for (int i = 0; i < 300; ++i) {
    const Point2 center{g.uniform(-50, 50), g.uniform(-50, 50)};
    ObjectShape shape = ObjectShape::circle(center, g.uniform(1, 60));
    switch (g.integer(0, 2)) {
      case 1: shape = ObjectShape::box(center, g.uniform(1, 60), g.uniform(1, 60), g.uniform(-3, 3)); break;
      case 2: shape = ObjectShape::thin_plate(center, g.uniform(5, 60), g.uniform(0.5, 5), g.uniform(-3, 3)); break;
      default: break;
    }
    const Point2 p0{g.uniform(-100, 100), g.uniform(-100, 100)};
    const Point2 p1{g.uniform(-100, 100), g.uniform(-100, 100)};
    const double ang = g.uniform(-kPi, kPi);
    const Point2 t{g.uniform(-200, 200), g.uniform(-200, 200)};
    const Segment2 s(p0, p1);
    const Segment2 moved(rotate(p0, {0, 0}, ang) + t, rotate(p1, {0, 0}, ang) + t);
    const double before = segment_shape_distance(s, shape);
    const double after = segment_shape_distance(moved, shape.transformed(ang, t));
    CAPTURE(i);
    CAPTURE(to_string(shape.kind()));
    CHECK(std::abs(after - before) <= 1e-9);
  }
}
