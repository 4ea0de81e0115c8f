#include "hoeckend/grasp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hoeckend/error.hpp"
#include "hoeckend/hoecken.hpp"
#include "hoeckend/spring.hpp"

namespace hoeckend {

const char* to_string(LinkId link) { return link == LinkId::BD ? "BD" : "distal"; }

const char* to_string(OutcomeMode mode) {
  switch (mode) {
    case OutcomeMode::Pinch: return "Pinch";
    case OutcomeMode::Envelope: return "Envelope";
    case OutcomeMode::Failure: return "Failure";
  }
  return "Unknown";
}

void HandConfig::validate() const {
  finger.validate();
  std::ostringstream msg;
  if (!(span >= 0.0 && span <= 200.0)) {
    msg << "span must lie in [0, 200] mm (span=" << span << ")";
  } else if (!(step > 0.0 && step <= 0.01)) {
    msg << "step must lie in (0, 0.01] rad (step=" << step << ")";
  } else if (!(tau_A > 0.0) || !std::isfinite(tau_A)) {
    msg << "tau_A must be positive";
  } else if (!(stroke_travel > 0.0)) {
    msg << "stroke_travel must be positive";
  } else if (stroke_samples < 360) {
    msg << "stroke_samples must be at least 360";
  } else if (!std::isfinite(seat_offset)) {
    msg << "seat_offset must be finite";
  } else {
    return;
  }
  fail(ErrorKind::InvalidArgument, msg.str());
}

namespace {

double open_pose_angle(const HoeckenDims& dims) {
  const Point2 ca = dims.A - dims.C;
  double th = std::atan2(ca.y, ca.x);
  if (th < 0.0) th += 2.0 * kPi;
  return th;
}

// Offset between a finger's local frame and the hand frame: x_hand = x_local - off
// for finger 0, x_hand = off - x_local for finger 1.
double frame_offset(const HandConfig& cfg, const Stroke& stroke) {
  return cfg.span / 2.0 + solve_position(cfg.finger.hoecken, stroke.start).D.x;
}

Point2 to_hand(int finger, Point2 local, double off) {
  return finger == 0 ? Point2{local.x - off, local.y} : Point2{off - local.x, local.y};
}

ObjectShape to_local(int finger, const ObjectShape& obj, double off) {
  return finger == 0 ? obj.translated({off, 0.0}) : obj.mirrored_x().translated({off, 0.0});
}

struct FingerLinks {
  Point2 B;
  Point2 D;
  Segment2 bd;
  Segment2 distal;
};

FingerLinks links_at(const FingerParams& p, double theta_A, double theta2) {
  const LinkagePose pose = solve_position(p.hoecken, theta_A);
  const Point2 tip = pose.D + from_vertical(theta2) * p.distal_length;
  return {pose.B, pose.D, Segment2(pose.B, pose.D), Segment2(pose.D, tip)};
}

double min_gap(const FingerLinks& f, const ObjectShape& obj) {
  return std::min(segment_shape_distance(f.bd, obj), segment_shape_distance(f.distal, obj));
}

constexpr double kContactTol = 1e-6;  // mm
constexpr int kMaxBisect = 200;

// Refines a sign change of `gap` between `clear` (gap > 0) and `hit` (gap <= 0)
// and returns the clear side once its gap is within kContactTol.
template <typename GapFn>
double bisect_contact(double clear, double hit, GapFn gap) {
  for (int i = 0; i < kMaxBisect; ++i) {
    const double mid = 0.5 * (clear + hit);
    if (mid == clear || mid == hit) break;
    const double g = gap(mid);
    if (g > 0.0) {
      clear = mid;
      if (g <= kContactTol) break;
    } else {
      hit = mid;
    }
  }
  return clear;
}

struct LocalContact {
  LinkId link;
  Point2 point;
};

LocalContact classify_contact(const FingerLinks& f, const ObjectShape& obj) {
  const Proximity bd = segment_shape_proximity(f.bd, obj);
  const Proximity dist = segment_shape_proximity(f.distal, obj);
  constexpr double kEnd = 1e-9;
  if (bd.t >= 1.0 - kEnd && dist.t <= kEnd) {
    // Both links are nearest at the shared joint D: decide by which side of
    // D the object lies on along the distal direction.
    const Point2 n = obj.outward_normal(f.D);
    const Point2 along = f.distal.p1() - f.distal.p0();
    return dot(n, along) < 0.0 ? LocalContact{LinkId::Distal, f.D} : LocalContact{LinkId::BD, f.D};
  }
  if (dist.distance <= bd.distance) return {LinkId::Distal, dist.on_segment};
  return {LinkId::BD, bd.on_segment};
}

struct FingerRun {
  FingerOutcome outcome;
  std::vector<Contact> contacts;  // local frame points
  std::vector<TrajectorySample> trajectory;
};

bool spring_feasible(const FingerParams& p, double theta1, double theta2) {
  try {
    (void)spring_state(p, theta1, theta2);
    return true;
  } catch (const Error&) {
    return false;
  }
}

FingerRun run_finger(const HandConfig& cfg, const Stroke& stroke, const ObjectShape& obj,
                     int finger, bool record) {
  const FingerParams& p = cfg.finger;
  FingerRun run;
  auto record_state = [&](double th, double t1, double t2, GraspMode mode) {
    if (record) run.trajectory.push_back({finger, th, t1, t2, mode});
  };

  auto crank_gap = [&](double th) { return min_gap(links_at(p, th, 0.0), obj); };

  double theta = stroke.start;
  record_state(theta, coupler_inclination(p.hoecken, theta), 0.0, GraspMode::Pinch);
  bool hit = false;
  while (theta > stroke.end) {
    const double next = std::max(theta - cfg.step, stroke.end);
    if (crank_gap(next) <= 0.0) {
      theta = bisect_contact(theta, next, crank_gap);
      hit = true;
      break;
    }
    theta = next;
    record_state(theta, coupler_inclination(p.hoecken, theta), 0.0, GraspMode::Pinch);
  }

  FingerOutcome& out = run.outcome;
  out.crank_angle = theta;
  out.state = {coupler_inclination(p.hoecken, theta), 0.0, GraspMode::Pinch};
  if (!hit) return run;

  out.contacted = true;
  const FingerLinks links = links_at(p, theta, 0.0);
  const LocalContact contact = classify_contact(links, obj);
  const PinchBreakdown drive = pinch_force_auto(p, cfg.tau_A, theta, 0.0);

  if (contact.link == LinkId::Distal) {
    const double h2 = distance(contact.point, links.D);
    const double F1 = pinch_force_auto(p, cfg.tau_A, theta, h2).F1;
    out.pinch_force = F1;
    run.contacts.push_back({finger, LinkId::Distal, contact.point, F1});
    record_state(theta, out.state.theta1, 0.0, GraspMode::Pinch);
    return run;
  }

  if (!(p.tau1 > p.stopper_preload)) {
    // The stopper holds: the finger stalls against the object on BD.
    const double arm = std::max(distance(contact.point, links.B), 1e-9);
    const double F = drive.M_mid / arm;
    out.pinch_force = F;
    run.contacts.push_back({finger, LinkId::BD, contact.point, F});
    record_state(theta, out.state.theta1, 0.0, GraspMode::Pinch);
    return run;
  }

  // Differential pair opens: theta1 frozen, distal wraps about D.
  out.transition = stroke.start - theta;
  const double theta1 = out.state.theta1;
  const double wrap_start = theta2_pre(p, theta1);
  const double wrap_limit = wrap_start + kPi / 2.0;
  auto wrap_gap = [&](double t2) { return segment_shape_distance(links_at(p, theta, t2).distal, obj); };

  double theta2 = wrap_start;
  record_state(theta, theta1, theta2, GraspMode::Envelope);
  while (theta2 < wrap_limit) {
    const double next = std::min(theta2 + cfg.step, wrap_limit);
    if (!spring_feasible(p, theta1, next)) break;
    if (wrap_gap(next) <= 0.0) {
      theta2 = bisect_contact(theta2, next, wrap_gap);
      out.distal_wrapped = true;
      break;
    }
    theta2 = next;
    record_state(theta, theta1, theta2, GraspMode::Envelope);
  }

  out.state = {theta1, theta2, GraspMode::Envelope};
  const EnvelopeForces forces = envelope_forces(p, theta1, theta2);
  out.envelope = forces;
  run.contacts.push_back({finger, LinkId::BD, contact.point, forces.F2});
  if (out.distal_wrapped) {
    const Proximity prox = segment_shape_proximity(links_at(p, theta, theta2).distal, obj);
    run.contacts.push_back({finger, LinkId::Distal, prox.on_segment, forces.F3});
  }
  record_state(theta, theta1, theta2, GraspMode::Envelope);
  return run;
}

void check_start(const HandConfig& cfg, const Stroke& stroke, const ObjectShape& obj, double off) {
  if (std::abs(obj.center().x) + obj.half_extent_x() >= cfg.span / 2.0) {
    fail(ErrorKind::InvalidObject, obj.describe() + " does not fit inside the span");
  }
  const FingerParams& p = cfg.finger;
  for (int finger = 0; finger < 2; ++finger) {
    const ObjectShape local = to_local(finger, obj, off);
    if (min_gap(links_at(p, stroke.start, 0.0), local) <= 0.0) {
      fail(ErrorKind::InvalidObject, obj.describe() + " overlaps a finger at the open pose");
    }
  }
  const Point2 a0 = to_hand(0, p.hoecken.A, off);
  const Point2 a1 = to_hand(1, p.hoecken.A, off);
  if (!(a0 == a1) && segment_shape_distance(Segment2(a0, a1), obj) <= 0.0) {
    fail(ErrorKind::InvalidObject, obj.describe() + " overlaps the palm");
  }
}

}  // namespace

Stroke closing_stroke(const HandConfig& cfg) {
  const HoeckenDims& dims = cfg.finger.hoecken;
  const PathTrace trace = trace_path(dims, 0.0, 2.0 * kPi, cfg.stroke_samples + 1);
  const FlatSegment window = flattest_segment(trace, cfg.stroke_travel * dims.l);
  const double start = open_pose_angle(dims);
  double lo = window.theta_lo;
  while (lo > start) lo -= 2.0 * kPi;
  while (lo + 2.0 * kPi <= start) lo += 2.0 * kPi;
  const double hi = lo + (window.theta_hi - window.theta_lo);
  if (hi < start || !(lo < start)) {
    fail(ErrorKind::InvalidArgument, "flattest window does not contain the open pose");
  }
  return {start, lo};
}

double seat_height(const HandConfig& cfg) {
  const Stroke stroke{open_pose_angle(cfg.finger.hoecken), 0.0};
  return solve_position(cfg.finger.hoecken, stroke.start).D.y + cfg.seat_offset;
}

ObjectShape seated_circle(const HandConfig& cfg, double diameter) {
  return ObjectShape::circle({0.0, seat_height(cfg) - diameter / 2.0}, diameter);
}

ObjectShape seated_box(const HandConfig& cfg, double width, double height) {
  return ObjectShape::box({0.0, seat_height(cfg) - height / 2.0}, width, height);
}

ObjectShape seated_plate(const HandConfig& cfg, double thickness, double width) {
  return ObjectShape::thin_plate({0.0, seat_height(cfg) - width / 2.0}, width, thickness);
}

GraspOutcome close_on_object(const HandConfig& cfg, const ObjectShape& obj,
                             bool record_trajectory) {
  cfg.validate();
  const Stroke stroke = closing_stroke(cfg);
  const double off = frame_offset(cfg, stroke);
  check_start(cfg, stroke, obj, off);
  if (cfg.symmetric && (std::abs(obj.center().x) > 1e-9 || std::abs(std::sin(obj.angle())) > 1e-12)) {
    fail(ErrorKind::InvalidObject, "symmetric simulation needs a centred, mirror-symmetric object");
  }

  GraspOutcome result;
  std::array<FingerRun, 2> runs;
  runs[0] = run_finger(cfg, stroke, to_local(0, obj, off), 0, record_trajectory);
  if (cfg.symmetric) {
    runs[1] = runs[0];
    for (auto& c : runs[1].contacts) c.finger = 1;
    for (auto& s : runs[1].trajectory) s.finger = 1;
  } else {
    runs[1] = run_finger(cfg, stroke, to_local(1, obj, off), 1, record_trajectory);
  }

  for (int f = 0; f < 2; ++f) {
    result.fingers[f] = runs[f].outcome;
    for (Contact c : runs[f].contacts) {
      c.point = to_hand(f, c.point, off);
      result.contacts.push_back(c);
    }
    result.trajectory.insert(result.trajectory.end(), runs[f].trajectory.begin(),
                             runs[f].trajectory.end());
  }

  const bool any_envelope = result.fingers[0].transition || result.fingers[1].transition;
  const bool both_contact = result.fingers[0].contacted && result.fingers[1].contacted;
  if (any_envelope) {
    result.mode = OutcomeMode::Envelope;
  } else if (both_contact) {
    result.mode = OutcomeMode::Pinch;
  } else {
    result.mode = OutcomeMode::Failure;
  }
  return result;
}

double transition_angle(const HandConfig& cfg, const ObjectShape& obj) {
  const GraspOutcome out = close_on_object(cfg, obj);
  if (out.mode != OutcomeMode::Envelope) {
    fail(ErrorKind::NotEnveloping, std::string("outcome is ") + to_string(out.mode));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const FingerOutcome& f : out.fingers) {
    if (f.transition) best = std::min(best, *f.transition);
  }
  return best;
}

}  // namespace hoeckend
