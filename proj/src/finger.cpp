#include "hoeckend/finger.hpp"

#include <cmath>
#include <sstream>

#include "hoeckend/error.hpp"

namespace hoeckend {

const char* to_string(GraspMode mode) {
  return mode == GraspMode::Pinch ? "Pinch" : "Envelope";
}

void FingerParams::validate() const {
  hoecken.validate();
  std::ostringstream msg;
  const bool finite = std::isfinite(AH) && std::isfinite(BH) && std::isfinite(AB0) &&
                      std::isfinite(EF) && E.finite() && std::isfinite(l1) &&
                      std::isfinite(h1) && std::isfinite(h2_env) && std::isfinite(k_d) &&
                      std::isfinite(tau1) && std::isfinite(distal_length);
  if (!finite) {
    msg << "non-finite finger parameter";
  } else if (!(AH > 0.0) || !(BH > 0.0)) {
    msg << "AH and BH must be positive";
  } else if (!(AB0 > 0.0) || !(AB0 < AH + BH)) {
    msg << "AB0 must lie in (0, AH + BH)";
  } else if (std::abs(EF - AB0) > 1e-9 * AB0) {
    msg << "EF must equal AB0 for the ABFE parallelogram (EF=" << EF << ", AB0=" << AB0 << ")";
  } else if (!(l1 > 0.0) || !(h1 > 0.0) || !(h2_env > 0.0)) {
    msg << "l1, h1 and h2_env must be positive";
  } else if (!(k_d >= 0.0)) {
    msg << "k_d must be non-negative";
  } else if (!(distal_length > 0.0)) {
    msg << "distal_length must be positive";
  } else if (std::isnan(stopper_preload) || stopper_preload < 0.0) {
    msg << "stopper_preload must be non-negative";
  } else {
    return;
  }
  fail(ErrorKind::InvalidArgument, msg.str());
}

PreContact pre_contact_geometry(const FingerParams& p, double theta1) {
  const Point2 A = p.hoecken.A;
  const Point2 C = p.hoecken.C;
  const Point2 u = from_vertical(theta1);
  // |C - t u - A| = AB0, t > 0 measured from C back toward the pivot.
  const Point2 ca = C - A;
  const double b = dot(ca, u);
  const double disc = b * b - (dot(ca, ca) - p.AB0 * p.AB0);
  if (disc < 0.0) {
    std::ostringstream msg;
    msg << "line through C at theta1=" << rad_to_deg(theta1) << " deg misses the AB0 circle";
    fail(ErrorKind::NoIntersection, msg.str());
  }
  const double t = b - std::sqrt(disc);
  const Point2 B0 = C - u * t;
  return {B0, p.E + (B0 - A)};
}

double theta2_pre(const FingerParams& p, double theta1) {
  const PreContact pc = pre_contact_geometry(p, theta1);
  const Point2 fb = pc.B0 - pc.F;
  return std::atan2(fb.y, fb.x);
}

Point2 locate_B(const FingerParams& p, double theta1, double theta2) {
  const Point2 C = p.hoecken.C;
  const PreContact pc = pre_contact_geometry(p, theta1);
  const Point2 fb0 = pc.B0 - pc.F;
  // At the pre-contact angle the construction must land on B0 itself, not a
  // rounding-level neighbour, so the spring reads exactly zero there.
  if (theta2 == std::atan2(fb0.y, fb0.x)) return pc.B0;
  const Point2 F = pc.F;
  const Point2 u = from_vertical(theta1);
  const Point2 w = direction(theta2);
  const double det = cross(u, w);
  const Point2 fc = F - C;
  if (std::abs(det) < 1e-12) {
    fail(ErrorKind::NoSolution, "BF ray parallel to line DB");
  }
  const double s = cross(fc, w) / det;
  const double r = cross(fc, u) / det;
  if (!(r > 0.0)) {
    std::ostringstream msg;
    msg << "BF ray at theta2=" << rad_to_deg(theta2) << " deg does not reach line DB";
    fail(ErrorKind::NoSolution, msg.str());
  }
  return C + u * s;
}

double virtual_AB_length(const FingerParams& p, double theta1, double theta2) {
  return distance(locate_B(p, theta1, theta2), p.hoecken.A);
}

double distal_orientation(const FingerState& state) {
  return state.mode == GraspMode::Pinch ? 0.0 : state.theta2;
}

}  // namespace hoeckend
