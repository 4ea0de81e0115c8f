#include "hoeckend/shape.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hoeckend/error.hpp"

namespace hoeckend {

const char* to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Circle: return "circle";
    case ShapeKind::Box: return "box";
    case ShapeKind::ThinPlate: return "plate";
  }
  return "unknown";
}

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    fail(ErrorKind::InvalidObject, std::string(what) + " must be positive and finite");
  }
}

}  // namespace

ObjectShape::ObjectShape(ShapeKind kind, Point2 center, double a, double b, double angle)
    : kind_(kind), center_(center), a_(a), b_(b), angle_(angle) {
  if (!center.finite() || !std::isfinite(angle)) {
    fail(ErrorKind::InvalidObject, "object pose must be finite");
  }
}

ObjectShape ObjectShape::circle(Point2 center, double diameter) {
  require_positive(diameter, "circle diameter");
  return {ShapeKind::Circle, center, diameter, 0.0, 0.0};
}

ObjectShape ObjectShape::box(Point2 center, double width, double height, double angle) {
  require_positive(width, "box width");
  require_positive(height, "box height");
  return {ShapeKind::Box, center, width, height, angle};
}

ObjectShape ObjectShape::thin_plate(Point2 center, double width, double thickness, double angle) {
  require_positive(width, "plate width");
  require_positive(thickness, "plate thickness");
  if (thickness > 5.0) {
    fail(ErrorKind::InvalidObject, "plate thickness must not exceed 5 mm");
  }
  return {ShapeKind::ThinPlate, center, width, thickness, angle};
}

Point2 ObjectShape::half_extents() const {
  switch (kind_) {
    case ShapeKind::Box: return {a_ / 2.0, b_ / 2.0};
    case ShapeKind::ThinPlate: return {b_ / 2.0, a_ / 2.0};
    case ShapeKind::Circle: break;
  }
  return {a_ / 2.0, a_ / 2.0};
}

Point2 ObjectShape::to_local(Point2 p) const { return rotate(p - center_, {0.0, 0.0}, -angle_); }

double ObjectShape::signed_distance(Point2 p) const {
  if (kind_ == ShapeKind::Circle) {
    return distance(p, center_) - a_ / 2.0;
  }
  const Point2 local = to_local(p);
  const Point2 h = half_extents();
  const double qx = std::abs(local.x) - h.x;
  const double qy = std::abs(local.y) - h.y;
  const double outside = std::hypot(std::max(qx, 0.0), std::max(qy, 0.0));
  const double inside = std::min(std::max(qx, qy), 0.0);
  return outside + inside;
}

Point2 ObjectShape::outward_normal(Point2 p) const {
  if (kind_ == ShapeKind::Circle) {
    const Point2 r = p - center_;
    const double n = r.norm();
    return n > 0.0 ? r / n : Point2{0.0, 1.0};
  }
  const Point2 local = to_local(p);
  const Point2 h = half_extents();
  const double qx = std::abs(local.x) - h.x;
  const double qy = std::abs(local.y) - h.y;
  const double sx = local.x < 0.0 ? -1.0 : 1.0;
  const double sy = local.y < 0.0 ? -1.0 : 1.0;
  Point2 n;
  if (qx > 0.0 || qy > 0.0) {
    n = {sx * std::max(qx, 0.0), sy * std::max(qy, 0.0)};
    n = n / n.norm();
  } else if (qx > qy) {
    n = {sx, 0.0};
  } else {
    n = {0.0, sy};
  }
  return rotate(n, {0.0, 0.0}, angle_);
}

ObjectShape ObjectShape::transformed(double angle, Point2 translation) const {
  const Point2 c = rotate(center_, {0.0, 0.0}, angle) + translation;
  return {kind_, c, a_, b_, angle_ + angle};
}

ObjectShape ObjectShape::mirrored_x() const {
  return {kind_, {-center_.x, center_.y}, a_, b_, -angle_};
}

double ObjectShape::half_extent_x() const {
  if (kind_ == ShapeKind::Circle) return a_ / 2.0;
  const Point2 h = half_extents();
  const double c = std::abs(std::cos(angle_));
  const double s = std::abs(std::sin(angle_));
  return h.x * c + h.y * s;
}

std::string ObjectShape::describe() const {
  std::ostringstream out;
  out << to_string(kind_) << "(center=(" << center_.x << "," << center_.y << ")";
  switch (kind_) {
    case ShapeKind::Circle: out << ", d=" << a_; break;
    case ShapeKind::Box: out << ", w=" << a_ << ", h=" << b_; break;
    case ShapeKind::ThinPlate: out << ", w=" << a_ << ", t=" << b_; break;
  }
  out << ")";
  return out.str();
}

namespace {

// The signed distance of a convex set is convex along any line, so a golden
// section search over the segment parameter finds the global minimum.
Proximity golden_minimum(const Segment2& s, const ObjectShape& shape) {
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = shape.signed_distance(s.at(x1));
  double f2 = shape.signed_distance(s.at(x2));
  for (int i = 0; i < 90; ++i) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = shape.signed_distance(s.at(x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = shape.signed_distance(s.at(x2));
    }
  }
  Proximity best{f1, x1, s.at(x1)};
  for (double t : {0.0, 1.0}) {
    const double f = shape.signed_distance(s.at(t));
    if (f < best.distance) best = {f, t, s.at(t)};
  }
  return best;
}

}  // namespace

Proximity segment_shape_proximity(const Segment2& s, const ObjectShape& shape) {
  if (shape.kind() == ShapeKind::Circle) {
    const double t = s.closest_param(shape.center());
    const Point2 q = s.at(t);
    return {distance(q, shape.center()) - shape.size_a() / 2.0, t, q};
  }
  return golden_minimum(s, shape);
}

}  // namespace hoeckend
