#pragma once

#include "hoeckend/hoecken.hpp"
#include "hoeckend/planar.hpp"

namespace hoeckend {

/// Differential pair, parallelogram and phalanx geometry of one finger plus
/// its spring and actuation constants. Lengths mm, torques N*mm.
struct FingerParams {
  double AH = 38.0;
  double BH = 38.0;
  double AB0 = 30.0;  // pre-contact virtual bar length
  double EF = 30.0;
  Point2 E{-30.0, 0.0};
  double l1 = 180.0;      // BD inter-joint lever
  double h1 = 150.0;      // contact arm on the second phalanx
  double h2_env = 40.0;   // contact arm on the third phalanx, envelope mode
  double k_d = 800.0;     // torsional stiffness, N*mm/rad
  double tau1 = 400.0;    // actuation torque at joint 1
  double stopper_preload = 0.0;  // torque tau1 must exceed to open the pair
  double distal_length = 50.0;   // distal phalanx, from D
  HoeckenDims hoecken;

  void validate() const;
};

enum class GraspMode { Pinch, Envelope };

const char* to_string(GraspMode mode);

struct FingerState {
  double theta1 = 0.0;  // second phalanx (line DB) from vertical, inward positive
  double theta2 = 0.0;  // third phalanx from vertical, inward positive
  GraspMode mode = GraspMode::Pinch;
};

struct PreContact {
  Point2 B0;
  Point2 F;
};

/// B0: point AB0 from A on the line through C inclined theta1 from vertical,
/// taking the intersection nearest C (B0 sits between A and C). F = E + (B0 - A).
/// Throws NoIntersection when the line misses the circle.
PreContact pre_contact_geometry(const FingerParams& p, double theta1);

/// Angle of F -> B0 from +x; the continuous limit of `locate_B`.
double theta2_pre(const FingerParams& p, double theta1);

/// B on line DB (through C, inclined theta1) such that F -> B is at theta2
/// from +x, with F locked at its pre-contact location. Throws NoSolution when
/// the ray is parallel to the line or points away from it.
Point2 locate_B(const FingerParams& p, double theta1, double theta2);

double virtual_AB_length(const FingerParams& p, double theta1, double theta2);

/// 0 in Pinch (the double parallelogram keeps the distal vertical), theta2 in Envelope.
double distal_orientation(const FingerState& state);

}  // namespace hoeckend
