#pragma once

#include <string>

#include "hoeckend/planar.hpp"

namespace hoeckend {

enum class ShapeKind { Circle, Box, ThinPlate };

const char* to_string(ShapeKind kind);

/// Rigid 2-D object in the hand frame. Boxes and plates are rectangles with an
/// orientation; a plate is a box whose thickness runs along its local x axis
/// and whose width runs along local y (it stands between the fingertips).
class ObjectShape {
 public:
  static ObjectShape circle(Point2 center, double diameter);
  static ObjectShape box(Point2 center, double width, double height, double angle = 0.0);
  static ObjectShape thin_plate(Point2 center, double width, double thickness, double angle = 0.0);

  ShapeKind kind() const { return kind_; }
  Point2 center() const { return center_; }
  double angle() const { return angle_; }
  /// Circle: diameter. Box: width. Plate: width (standing extent).
  double size_a() const { return a_; }
  /// Circle: unused. Box: height. Plate: thickness.
  double size_b() const { return b_; }

  double signed_distance(Point2 p) const;
  /// Unit gradient of the signed distance at `p`.
  Point2 outward_normal(Point2 p) const;

  /// Rotate about the origin by `angle`, then translate.
  ObjectShape transformed(double angle, Point2 translation) const;
  ObjectShape translated(Point2 offset) const { return transformed(0.0, offset); }
  /// Reflection x -> -x.
  ObjectShape mirrored_x() const;

  /// Half of the axis-aligned extent along x.
  double half_extent_x() const;

  std::string describe() const;

 private:
  ObjectShape(ShapeKind kind, Point2 center, double a, double b, double angle);
  Point2 half_extents() const;
  Point2 to_local(Point2 p) const;

  ShapeKind kind_;
  Point2 center_;
  double a_;
  double b_;
  double angle_;
};

struct Proximity {
  double distance;   // signed; negative inside the shape
  double t;          // segment parameter of the extremal point
  Point2 on_segment;
};

/// Minimum signed distance from the points of `s` to the boundary of `shape`:
/// the gap when disjoint, minus the deepest penetration otherwise.
Proximity segment_shape_proximity(const Segment2& s, const ObjectShape& shape);

inline double segment_shape_distance(const Segment2& s, const ObjectShape& shape) {
  return segment_shape_proximity(s, shape).distance;
}

}  // namespace hoeckend
