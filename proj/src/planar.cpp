#include "hoeckend/planar.hpp"

#include <algorithm>
#include <sstream>

#include "hoeckend/error.hpp"

namespace hoeckend {

Segment2::Segment2(Point2 p0, Point2 p1) : p0_(p0), p1_(p1) {
  if (!p0.finite() || !p1.finite()) {
    fail(ErrorKind::InvalidArgument, "segment endpoints must be finite");
  }
  if (p0 == p1) {
    fail(ErrorKind::InvalidArgument, "zero-length segment");
  }
}

double Segment2::closest_param(Point2 p) const {
  const Point2 d = p1_ - p0_;
  const double t = dot(p - p0_, d) / dot(d, d);
  return std::clamp(t, 0.0, 1.0);
}

Point2 rotate(Point2 p, Point2 about, double angle) {
  if (!p.finite() || !about.finite() || !std::isfinite(angle)) {
    fail(ErrorKind::InvalidArgument, "rotate needs finite inputs");
  }
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Point2 r = p - about;
  return {about.x + c * r.x - s * r.y, about.y + s * r.x + c * r.y};
}

double triangle_angle(double a, double b, double c) {
  constexpr double kTol = 1e-9;
  if (!(a > 0.0) || !(b > 0.0) || !(c >= 0.0) || !std::isfinite(a) || !std::isfinite(b) ||
      !std::isfinite(c)) {
    std::ostringstream msg;
    msg << "sides must be positive and finite (a=" << a << ", b=" << b << ", c=" << c << ")";
    fail(ErrorKind::DegenerateTriangle, msg.str());
  }
  double cosine = (a * a + b * b - c * c) / (2.0 * a * b);
  if (cosine > 1.0 + kTol || cosine < -1.0 - kTol) {
    std::ostringstream msg;
    msg << "triangle inequality violated (a=" << a << ", b=" << b << ", c=" << c << ")";
    fail(ErrorKind::DegenerateTriangle, msg.str());
  }
  cosine = std::clamp(cosine, -1.0, 1.0);
  return std::acos(cosine);
}

}  // namespace hoeckend
