#pragma once

#include "hoeckend/finger.hpp"

namespace hoeckend {

struct SpringStateSample {
  double theta1;
  double theta2;
  double alpha;
  double alpha0;
  double tau_d;
  double s1;
  double s2;
};

/// Hinge angle at H between AH and BH closing the virtual bar AB(theta1, theta2).
/// Throws StopperLimit once AB reaches AH + BH.
double opening_angle(const FingerParams& p, double theta1, double theta2);

/// Hinge angle at the pre-contact pose. Constant (AB = AB0) for the default
/// construction, kept as a function of theta1 for general geometries.
double rest_angle(const FingerParams& p, double theta1);

/// tau_d = k_d (alpha - alpha0); the stopper holds the pair closed, so the
/// torque is 0 whenever alpha <= alpha0.
double spring_torque(const FingerParams& p, double theta1, double theta2);

struct Sensitivities {
  double s1;  // d alpha / d theta1 at fixed theta2
  double s2;  // d alpha / d theta2 at fixed theta1
};

constexpr double kSensitivityStep = 1e-5;

/// Central differences of `opening_angle`. Throws NonSmooth if a neighbouring
/// evaluation is infeasible.
Sensitivities sensitivities(const FingerParams& p, double theta1, double theta2,
                            double h = kSensitivityStep);

SpringStateSample spring_state(const FingerParams& p, double theta1, double theta2);

}  // namespace hoeckend
