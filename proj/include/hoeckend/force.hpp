#pragma once

#include "hoeckend/finger.hpp"
#include "hoeckend/planar.hpp"
#include "hoeckend/spring.hpp"

namespace hoeckend {

// --- Parallel pinching -----------------------------------------------------

/// F_Dx = tau_A / (dx_D / d theta_A). Throws SingularJacobian for |dxD| <= 1e-9.
double pinch_drive_force(double tau_A, double dxD);

/// M_mid = F_Dx * r_eq. Throws InvalidArgument unless r_eq > 0.
double mid_joint_torque(double F_Dx, double r_eq);

/// F1 = M_mid / (h2 + l1 cos theta1). Throws DegenerateLever for a lever <= 1e-9.
double pinch_force(double M_mid, double h2, double theta1, double l1);

/// Fixed Jacobian / moment arm approximation used for the pinch surface.
struct ConstantPinchModel {
  double J_x;   // mm/rad
  double r_eq;  // mm
};

/// Default constants: J_x = |dxD/dthetaA| at mid-stroke (crank at 270 deg,
/// D over the slider) and r_eq = l1.
ConstantPinchModel default_pinch_model(const FingerParams& p);

double pinch_force_constant(const ConstantPinchModel& model, double tau_A, double h2,
                            double theta1, double l1);

struct PinchBreakdown {
  double theta1;  // coupler inclination at theta_A
  double dxD;     // signed dx_D / d theta_A
  double F_Dx;    // drive force magnitude along the closing direction
  double r_eq;    // l_BD cos(theta1), vertical lever of BD about B
  double M_mid;
  double F1;
};

/// Full-linkage route: the drive force comes from the instantaneous Jacobian of
/// the Hoecken stage and the mid-joint moment from the BD lever about B.
PinchBreakdown pinch_force_auto(const FingerParams& p, double tau_A, double theta_A, double h2);

// --- Self-adaptive enveloping --------------------------------------------------

struct EnvelopeForces {
  double F2;  // second phalanx normal contact force, N
  double F3;  // third phalanx normal contact force, N (negative values reported as-is)
};

/// Closed-form solution of the upper-triangular balance.
EnvelopeForces envelope_forces(const FingerParams& p, double theta1, double theta2);
EnvelopeForces envelope_forces(const FingerParams& p, double theta1, double theta2, double h1,
                               double h2);
/// Same, from an already evaluated spring state.
EnvelopeForces envelope_forces(const FingerParams& p, const SpringStateSample& spring, double h1,
                               double h2);

struct ContactKinematics {
  Point2 G1;
  Point2 G2;
  Point2 dG1_dtheta1;
  Point2 dG1_dtheta2;
  Point2 dG2_dtheta1;
  Point2 dG2_dtheta2;
};

/// Contact points with the middle joint as origin and their analytic Jacobian
/// columns. Uses h1 and h2_env from `p`.
ContactKinematics contact_kinematics(const FingerParams& p, const FingerState& state);

/// Cartesian normal-force vectors F (cos theta, -sin theta) for each phalanx.
Point2 contact_force_vector(double magnitude, double phalanx_angle);

/// Matrix route: assembles the 2x2 balance from the contact Jacobians and the
/// force directions and solves it by partial-pivot elimination.
EnvelopeForces envelope_forces_matrix(const FingerParams& p, double theta1, double theta2);

/// Largest generalized-force imbalance |Q_i| between actuation/spring work and
/// contact work, per unit virtual displacement of theta1 and theta2.
double virtual_work_residual(const FingerParams& p, const SpringStateSample& spring,
                             const EnvelopeForces& forces);

}  // namespace hoeckend
