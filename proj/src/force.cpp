#include "hoeckend/force.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hoeckend/error.hpp"
#include "hoeckend/hoecken.hpp"

namespace hoeckend {

double pinch_drive_force(double tau_A, double dxD) {
  if (!(std::abs(dxD) > 1e-9)) {
    std::ostringstream msg;
    msg << "dx_D/dtheta_A = " << dxD << " mm/rad is singular";
    fail(ErrorKind::SingularJacobian, msg.str());
  }
  return tau_A / dxD;
}

double mid_joint_torque(double F_Dx, double r_eq) {
  if (!(r_eq > 0.0)) fail(ErrorKind::InvalidArgument, "r_eq must be positive");
  return F_Dx * r_eq;
}

double pinch_force(double M_mid, double h2, double theta1, double l1) {
  const double lever = h2 + l1 * std::cos(theta1);
  if (!(lever > 1e-9)) {
    std::ostringstream msg;
    msg << "pinch lever h2 + l1 cos(theta1) = " << lever << " mm";
    fail(ErrorKind::DegenerateLever, msg.str());
  }
  return M_mid / lever;
}

ConstantPinchModel default_pinch_model(const FingerParams& p) {
  return {std::abs(dxD_dthetaA(p.hoecken, 1.5 * kPi)), p.l1};
}

double pinch_force_constant(const ConstantPinchModel& model, double tau_A, double h2,
                            double theta1, double l1) {
  const double F_Dx = pinch_drive_force(tau_A, model.J_x);
  return pinch_force(mid_joint_torque(F_Dx, model.r_eq), h2, theta1, l1);
}

PinchBreakdown pinch_force_auto(const FingerParams& p, double tau_A, double theta_A, double h2) {
  PinchBreakdown out{};
  out.theta1 = coupler_inclination(p.hoecken, theta_A);
  out.dxD = dxD_dthetaA(p.hoecken, theta_A);
  out.F_Dx = std::abs(pinch_drive_force(tau_A, out.dxD));
  out.r_eq = p.hoecken.l_BD * std::cos(out.theta1);
  out.M_mid = mid_joint_torque(out.F_Dx, out.r_eq);
  out.F1 = pinch_force(out.M_mid, h2, out.theta1, p.l1);
  return out;
}

EnvelopeForces envelope_forces(const FingerParams& p, const SpringStateSample& spring, double h1,
                               double h2) {
  if (!(h1 > 0.0) || !(h2 > 0.0)) fail(ErrorKind::InvalidArgument, "contact arms must be positive");
  const double F3 = -spring.tau_d * spring.s2 / h2;
  const double F2 = (p.tau1 - spring.tau_d * spring.s1) / h1 -
                    (p.l1 * std::cos(spring.theta2 - spring.theta1) / h1) * F3;
  return {F2, F3};
}

EnvelopeForces envelope_forces(const FingerParams& p, double theta1, double theta2, double h1,
                               double h2) {
  return envelope_forces(p, spring_state(p, theta1, theta2), h1, h2);
}

EnvelopeForces envelope_forces(const FingerParams& p, double theta1, double theta2) {
  return envelope_forces(p, theta1, theta2, p.h1, p.h2_env);
}

ContactKinematics contact_kinematics(const FingerParams& p, const FingerState& state) {
  const double t1 = state.theta1;
  const double t2 = state.theta2;
  const Point2 e1 = from_vertical(t1);
  const Point2 e2 = from_vertical(t2);
  const Point2 n1{std::cos(t1), -std::sin(t1)};
  const Point2 n2{std::cos(t2), -std::sin(t2)};
  ContactKinematics k;
  k.G1 = e1 * p.h1;
  k.G2 = e1 * p.l1 + e2 * p.h2_env;
  k.dG1_dtheta1 = n1 * p.h1;
  k.dG1_dtheta2 = {0.0, 0.0};
  k.dG2_dtheta1 = n1 * p.l1;
  k.dG2_dtheta2 = n2 * p.h2_env;
  return k;
}

Point2 contact_force_vector(double magnitude, double phalanx_angle) {
  return Point2{std::cos(phalanx_angle), -std::sin(phalanx_angle)} * magnitude;
}

namespace {

struct GeneralizedLoad {
  double q1;
  double q2;
};

GeneralizedLoad actuation_load(const FingerParams& p, const SpringStateSample& s) {
  return {p.tau1 - s.tau_d * s.s1, -s.tau_d * s.s2};
}

}  // namespace

EnvelopeForces envelope_forces_matrix(const FingerParams& p, double theta1, double theta2) {
  const SpringStateSample s = spring_state(p, theta1, theta2);
  const ContactKinematics k = contact_kinematics(p, {theta1, theta2, GraspMode::Envelope});
  const Point2 u2 = contact_force_vector(1.0, theta1);
  const Point2 u3 = contact_force_vector(1.0, theta2);
  // Row i: generalized force on theta_i per unit F2 / F3.
  double m[2][3] = {
      {dot(u2, k.dG1_dtheta1), dot(u3, k.dG2_dtheta1), 0.0},
      {dot(u2, k.dG1_dtheta2), dot(u3, k.dG2_dtheta2), 0.0},
  };
  const GeneralizedLoad q = actuation_load(p, s);
  m[0][2] = q.q1;
  m[1][2] = q.q2;
  if (std::abs(m[1][0]) > std::abs(m[0][0])) std::swap(m[0], m[1]);
  if (std::abs(m[0][0]) < 1e-300) fail(ErrorKind::NoSolution, "singular envelope balance");
  const double f = m[1][0] / m[0][0];
  for (int c = 0; c < 3; ++c) m[1][c] -= f * m[0][c];
  if (std::abs(m[1][1]) < 1e-300) fail(ErrorKind::NoSolution, "singular envelope balance");
  const double F3 = m[1][2] / m[1][1];
  const double F2 = (m[0][2] - m[0][1] * F3) / m[0][0];
  return {F2, F3};
}

double virtual_work_residual(const FingerParams& p, const SpringStateSample& spring,
                             const EnvelopeForces& forces) {
  const ContactKinematics k =
      contact_kinematics(p, {spring.theta1, spring.theta2, GraspMode::Envelope});
  const Point2 F2 = contact_force_vector(forces.F2, spring.theta1);
  const Point2 F3 = contact_force_vector(forces.F3, spring.theta2);
  const GeneralizedLoad q = actuation_load(p, spring);
  const double r1 = q.q1 - (dot(F2, k.dG1_dtheta1) + dot(F3, k.dG2_dtheta1));
  const double r2 = q.q2 - (dot(F2, k.dG1_dtheta2) + dot(F3, k.dG2_dtheta2));
  return std::max(std::abs(r1), std::abs(r2));
}

}  // namespace hoeckend
