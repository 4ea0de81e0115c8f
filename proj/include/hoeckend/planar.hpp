#pragma once

#include <cmath>

namespace hoeckend {

/// Millimetres everywhere; angles are radians unless a name says otherwise.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Point2&) const = default;

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Point2 operator*(double s, Point2 p) { return p * s; }
constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }

/// Unit vector at `angle` from the +x axis.
inline Point2 direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Unit vector inclined `angle` from +y toward +x.
inline Point2 from_vertical(double angle) { return {std::sin(angle), std::cos(angle)}; }

/// A non-degenerate segment; construction rejects p0 == p1 and non-finite ends.
class Segment2 {
 public:
  Segment2(Point2 p0, Point2 p1);

  Point2 p0() const { return p0_; }
  Point2 p1() const { return p1_; }
  Point2 at(double t) const { return p0_ + (p1_ - p0_) * t; }
  double length() const { return distance(p0_, p1_); }

  /// Parameter in [0, 1] of the point on the segment nearest to `p`.
  double closest_param(Point2 p) const;
  double distance_to(Point2 p) const { return distance(at(closest_param(p)), p); }

 private:
  Point2 p0_;
  Point2 p1_;
};

Point2 rotate(Point2 p, Point2 about, double angle);

/// Interior angle opposite side `c` of the triangle with sides a, b, c.
/// Cosines within 1e-9 outside [-1, 1] are clamped; beyond that the call
/// throws DegenerateTriangle.
double triangle_angle(double a, double b, double c);

constexpr double kPi = 3.14159265358979323846;
constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace hoeckend
