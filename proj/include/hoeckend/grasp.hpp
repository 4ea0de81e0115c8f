#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hoeckend/finger.hpp"
#include "hoeckend/force.hpp"
#include "hoeckend/shape.hpp"

namespace hoeckend {

/// Two mirrored fingers. Finger 0 sits at x < 0 and closes toward +x; finger 1
/// is its reflection. Each finger's Hoecken stage lives in a local frame equal
/// to the linkage frame (A at its pivot, inward = +x); at the open pose the
/// distal joints D are span apart.
struct HandConfig {
  FingerParams finger;
  double span = 150.0;        // fingertip opening at the open pose, mm
  double step = 0.005;        // crank / wrap increment, rad
  bool symmetric = false;     // simulate finger 0 and mirror it
  double tau_A = 400.0;       // motor torque at A for pinch forces, N*mm
  double stroke_travel = 5.18;  // stroke window travel, units of l
  int stroke_samples = 3600;    // trace resolution for the stroke window
  double seat_offset = 25.0;    // seat line above D at the open pose, mm

  void validate() const;
};

/// Crank interval of one closing stroke: from the open pose (coupler vertical,
/// D over the slider) down to the lower end of the flattest window.
struct Stroke {
  double start;
  double end;  // < start; the crank angle decreases while closing
};

Stroke closing_stroke(const HandConfig& cfg);

/// Height of the seat line that default object poses rest against.
double seat_height(const HandConfig& cfg);

/// Objects centred between the fingers, their top touching the seat line.
ObjectShape seated_circle(const HandConfig& cfg, double diameter);
ObjectShape seated_box(const HandConfig& cfg, double width, double height);
ObjectShape seated_plate(const HandConfig& cfg, double thickness, double width = 20.0);

enum class LinkId { BD, Distal };
enum class OutcomeMode { Pinch, Envelope, Failure };

const char* to_string(LinkId link);
const char* to_string(OutcomeMode mode);

struct Contact {
  int finger;
  LinkId link;
  Point2 point;  // hand frame
  double force;  // normal force, N
};

struct TrajectorySample {
  int finger;
  double crank_angle;
  double theta1;
  double theta2;
  GraspMode mode;
};

struct FingerOutcome {
  bool contacted = false;
  FingerState state;
  double crank_angle = 0.0;
  /// Crank rotation from the open pose to BD contact for a finger that opened
  /// its differential pair.
  std::optional<double> transition;
  std::optional<EnvelopeForces> envelope;
  std::optional<double> pinch_force;
  bool distal_wrapped = false;  // distal touched during wrapping
};

struct GraspOutcome {
  OutcomeMode mode = OutcomeMode::Failure;
  std::vector<Contact> contacts;
  std::array<FingerOutcome, 2> fingers;
  std::vector<TrajectorySample> trajectory;
};

/// Quasi-static closure. Throws InvalidObject when the object overlaps the
/// palm or a finger at the open pose or does not fit inside the span.
GraspOutcome close_on_object(const HandConfig& cfg, const ObjectShape& obj,
                             bool record_trajectory = false);

/// Closing-direction crank rotation at which the first finger's differential
/// pair opens. Throws NotEnveloping otherwise.
double transition_angle(const HandConfig& cfg, const ObjectShape& obj);

}  // namespace hoeckend
