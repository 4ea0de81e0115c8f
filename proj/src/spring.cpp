#include "hoeckend/spring.hpp"

#include <sstream>

#include "hoeckend/error.hpp"

namespace hoeckend {

namespace {

double hinge_angle(const FingerParams& p, double ab) {
  if (ab >= p.AH + p.BH) {
    std::ostringstream msg;
    msg << "virtual bar AB=" << ab << " reaches AH+BH=" << p.AH + p.BH;
    fail(ErrorKind::StopperLimit, msg.str());
  }
  return triangle_angle(p.AH, p.BH, ab);
}

}  // namespace

double opening_angle(const FingerParams& p, double theta1, double theta2) {
  return hinge_angle(p, virtual_AB_length(p, theta1, theta2));
}

double rest_angle(const FingerParams& p, double theta1) {
  return hinge_angle(p, distance(pre_contact_geometry(p, theta1).B0, p.hoecken.A));
}

double spring_torque(const FingerParams& p, double theta1, double theta2) {
  const double opening = opening_angle(p, theta1, theta2) - rest_angle(p, theta1);
  return opening > 0.0 ? p.k_d * opening : 0.0;
}

Sensitivities sensitivities(const FingerParams& p, double theta1, double theta2, double h) {
  try {
    const double s1 =
        (opening_angle(p, theta1 + h, theta2) - opening_angle(p, theta1 - h, theta2)) / (2.0 * h);
    const double s2 =
        (opening_angle(p, theta1, theta2 + h) - opening_angle(p, theta1, theta2 - h)) / (2.0 * h);
    return {s1, s2};
  } catch (const Error& e) {
    std::ostringstream msg;
    msg << "opening angle not smooth near theta1=" << rad_to_deg(theta1)
        << " deg, theta2=" << rad_to_deg(theta2) << " deg (" << e.what() << ")";
    fail(ErrorKind::NonSmooth, msg.str());
  }
}

SpringStateSample spring_state(const FingerParams& p, double theta1, double theta2) {
  const double alpha = opening_angle(p, theta1, theta2);
  const double alpha0 = rest_angle(p, theta1);
  const double tau = alpha > alpha0 ? p.k_d * (alpha - alpha0) : 0.0;
  const Sensitivities s = sensitivities(p, theta1, theta2);
  return {theta1, theta2, alpha, alpha0, tau, s.s1, s.s2};
}

}  // namespace hoeckend
