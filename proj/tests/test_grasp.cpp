#include <doctest.h>

#include <cmath>
#include <limits>

#include "hoeckend/error.hpp"
#include "hoeckend/grasp.hpp"
#include "hoeckend/hoecken.hpp"

using namespace hoeckend;

namespace {

const HandConfig kHand{};

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Config;
}

// Rebuilds finger f's links at its final state in the hand frame.
struct Links {
  Segment2 bd;
  Segment2 distal;
};
Links final_links(const HandConfig& cfg, const GraspOutcome& out, int f) {
  const Stroke s = closing_stroke(cfg);
  const double off = cfg.span / 2 + solve_position(cfg.finger.hoecken, s.start).D.x;
  const FingerOutcome& fo = out.fingers[f];
  const LinkagePose pose = solve_position(cfg.finger.hoecken, fo.crank_angle);
  const double t2 = fo.state.mode == GraspMode::Envelope ? fo.state.theta2 : 0.0;
  const Point2 tip = pose.D + from_vertical(t2) * cfg.finger.distal_length;
  auto h = [&](Point2 p) { return f == 0 ? Point2{p.x - off, p.y} : Point2{off - p.x, p.y}; };
  return {Segment2(h(pose.B), h(pose.D)), Segment2(h(pose.D), h(tip))};
}

}  // namespace

TEST_CASE("stroke and seat") {
  const Stroke s = closing_stroke(kHand);
  CHECK(s.start == doctest::Approx(1.5 * kPi));
  CHECK(s.end < s.start);
  CHECK(seat_height(kHand) == doctest::Approx(175.0));
  const ObjectShape c = seated_circle(kHand, 80);
  CHECK(c.center().y + 40 == doctest::Approx(175.0));
}

TEST_CASE("config validation") {
  HandConfig h = kHand;
  h.span = 250;
  CHECK(kind_of([&] { close_on_object(h, seated_circle(kHand, 40)); }) == ErrorKind::InvalidArgument);
  h = kHand;
  h.step = 0.02;
  CHECK(kind_of([&] { close_on_object(h, seated_circle(kHand, 40)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("invalid objects") {
  CHECK(kind_of([] { close_on_object(kHand, seated_circle(kHand, 160)); }) == ErrorKind::InvalidObject);
  CHECK(kind_of([] { close_on_object(kHand, ObjectShape::circle({0, 0}, 40)); }) ==
        ErrorKind::InvalidObject);
  CHECK(kind_of([] { close_on_object(kHand, ObjectShape::circle({-70, 150}, 20)); }) ==
        ErrorKind::InvalidObject);
  HandConfig sym = kHand;
  sym.symmetric = true;
  CHECK(kind_of([&] { close_on_object(sym, ObjectShape::circle({10, 135}, 40)); }) ==
        ErrorKind::InvalidObject);
}

TEST_CASE("circle of 80 mm is enveloped") {
  const GraspOutcome out = close_on_object(kHand, seated_circle(kHand, 80));
  CHECK(out.mode == OutcomeMode::Envelope);
  for (int f = 0; f < 2; ++f) {
    CAPTURE(f);
    const FingerOutcome& fo = out.fingers[f];
    REQUIRE(fo.envelope.has_value());
    REQUIRE(fo.transition.has_value());
    CHECK(fo.state.mode == GraspMode::Envelope);
    // reported forces are exactly the force model at the final angles
    const EnvelopeForces ref = envelope_forces(kHand.finger, fo.state.theta1, fo.state.theta2);
    CHECK(fo.envelope->F2 == ref.F2);
    CHECK(fo.envelope->F3 == ref.F3);
  }
  // the BD contact of each finger is listed before its distal contact
  int last_finger = -1;
  bool seen_bd = false;
  for (const Contact& c : out.contacts) {
    if (c.finger != last_finger) {
      last_finger = c.finger;
      seen_bd = false;
    }
    if (c.link == LinkId::BD) seen_bd = true;
    if (c.link == LinkId::Distal) CHECK(seen_bd);
    CHECK(std::isfinite(c.force));
  }
}

TEST_CASE("thin plate is pinched by the distal phalanges only") {
  const GraspOutcome out = close_on_object(kHand, seated_plate(kHand, 1.0));
  CHECK(out.mode == OutcomeMode::Pinch);
  REQUIRE(out.contacts.size() == 2);
  for (const Contact& c : out.contacts) {
    CHECK(c.link == LinkId::Distal);
    CHECK(c.force > 0.0);
    CHECK(std::abs(std::abs(c.point.x) - 0.5) < 1e-5);
  }
  for (const FingerOutcome& f : out.fingers) {
    CHECK(distal_orientation(f.state) == 0.0);
    CHECK(f.pinch_force.has_value());
  }
}

TEST_CASE("empty workspace fails") {
  const GraspOutcome out = close_on_object(kHand, ObjectShape::circle({0, 400}, 10));
  CHECK(out.mode == OutcomeMode::Failure);
  CHECK(out.contacts.empty());
  CHECK_FALSE(out.fingers[0].contacted);
  CHECK(out.fingers[0].crank_angle == doctest::Approx(closing_stroke(kHand).end));
}

TEST_CASE("mode threshold is a single crossing over 10..120 mm") {
  int flips = 0;
  OutcomeMode prev = OutcomeMode::Pinch;
  double threshold = 0;
  for (int d = 10; d <= 120; ++d) {
    const OutcomeMode m = close_on_object(kHand, seated_circle(kHand, d)).mode;
    CAPTURE(d);
    CHECK(m != OutcomeMode::Failure);
    if (d == 10) CHECK(m == OutcomeMode::Pinch);
    if (m != prev) {
      ++flips;
      threshold = d;
    }
    prev = m;
  }
  CHECK(flips == 1);
  CHECK(prev == OutcomeMode::Envelope);
  MESSAGE("first enveloped diameter: " << threshold << " mm");
}

TEST_CASE("transition angle") {
  const double t100 = transition_angle(kHand, seated_circle(kHand, 100));
  const double t60 = transition_angle(kHand, seated_circle(kHand, 60));
  CHECK(t100 < t60);

  HandConfig rigid = kHand;
  rigid.finger.stopper_preload = std::numeric_limits<double>::infinity();
  CHECK(kind_of([&] { transition_angle(rigid, seated_circle(kHand, 80)); }) == ErrorKind::NotEnveloping);
  CHECK(close_on_object(rigid, seated_circle(kHand, 80)).mode == OutcomeMode::Pinch);

  // zero preload: the transition coincides with the BD contact crank angle
  const GraspOutcome out = close_on_object(kHand, seated_circle(kHand, 80));
  const Stroke s = closing_stroke(kHand);
  for (const FingerOutcome& f : out.fingers) CHECK(*f.transition == s.start - f.crank_angle);
}

TEST_CASE("determinism and symmetric mode") {
  for (double d : {30.0, 80.0}) {
    const GraspOutcome a = close_on_object(kHand, seated_circle(kHand, d), true);
    const GraspOutcome b = close_on_object(kHand, seated_circle(kHand, d), true);
    REQUIRE(a.contacts.size() == b.contacts.size());
    for (std::size_t i = 0; i < a.contacts.size(); ++i) {
      CHECK(a.contacts[i].point == b.contacts[i].point);
      CHECK(a.contacts[i].force == b.contacts[i].force);
    }
    REQUIRE(a.trajectory.size() == b.trajectory.size());
    for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
      CHECK(a.trajectory[i].crank_angle == b.trajectory[i].crank_angle);
      CHECK(a.trajectory[i].theta2 == b.trajectory[i].theta2);
    }
    HandConfig sym = kHand;
    sym.symmetric = true;
    const GraspOutcome c = close_on_object(sym, seated_circle(kHand, d));
    CHECK(c.mode == a.mode);
    REQUIRE(c.contacts.size() == a.contacts.size());
    for (std::size_t i = 0; i < a.contacts.size(); ++i) {
      CHECK(std::abs(c.contacts[i].point.x - a.contacts[i].point.x) < 1e-9);
      CHECK(std::abs(c.contacts[i].force - a.contacts[i].force) < 1e-9);
    }
  }
}

TEST_CASE("off-centre object is handled per finger") {
  const GraspOutcome out = close_on_object(kHand, ObjectShape::circle({20, 140}, 70));
  CHECK(out.mode != OutcomeMode::Failure);
  CHECK(out.fingers[0].crank_angle != out.fingers[1].crank_angle);
}

TEST_CASE("no interpenetration at termination") {
  for (double step : {0.01, 0.005, 0.001}) {
    HandConfig h = kHand;
    h.step = step;
    for (double d : {20.0, 45.0, 55.0, 80.0, 110.0}) {
      const ObjectShape obj = seated_circle(h, d);
      const GraspOutcome out = close_on_object(h, obj);
      for (int f = 0; f < 2; ++f) {
        const Links l = final_links(h, out, f);
        CAPTURE(step);
        CAPTURE(d);
        // contacts are refined to the clear side of the surface
        CHECK(segment_shape_distance(l.bd, obj) >= 0.0);
        CHECK(segment_shape_distance(l.distal, obj) >= 0.0);
        if (out.fingers[f].contacted) {
          CHECK(std::min(segment_shape_distance(l.bd, obj), segment_shape_distance(l.distal, obj)) <= 1e-6);
        }
      }
    }
  }
}

TEST_CASE("box objects") {
  // wholly above the distal joints: only the distal phalanges reach it
  const GraspOutcome small = close_on_object(kHand, seated_box(kHand, 20, 20));
  CHECK(small.mode == OutcomeMode::Pinch);
  for (const Contact& c : small.contacts) CHECK(c.link == LinkId::Distal);
  // reaching below them: the BD links touch first
  CHECK(close_on_object(kHand, seated_box(kHand, 20, 40)).mode == OutcomeMode::Envelope);
  const GraspOutcome big = close_on_object(kHand, seated_box(kHand, 90, 60));
  CHECK(big.mode != OutcomeMode::Failure);
}
