#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hoeckend/finger.hpp"
#include "hoeckend/grasp.hpp"
#include "hoeckend/shape.hpp"
#include "hoeckend/synthesis.hpp"

namespace hoeckend::io {

struct TraceSettings {
  double range_lo_deg = 0.0;
  double range_hi_deg = 360.0;
  int samples = 361;
  double min_travel_units = 5.18;
  int metric_samples = 3600;
};

struct PinchSettings {
  double tau_A = 400.0;
  std::optional<double> J_x;   // empty: |dxD/dthetaA| at mid-stroke
  std::optional<double> r_eq;  // empty: l1
  double h2_min = 0.0, h2_max = 50.0;
  double theta1_min_deg = 0.0, theta1_max_deg = 40.0;
  int rows = 51, cols = 41;
};

struct EnvelopeSettings {
  double theta1_min_deg = 0.0, theta1_max_deg = 40.0;
  double theta2_min_deg = 0.0, theta2_max_deg = 60.0;
  int rows = 41, cols = 61;
};

struct HandSettings {
  double span = 150.0;
  double step_deg = 0.25;
  bool symmetric = false;
  double seat_offset = 25.0;
  double stroke_travel_units = 5.18;
  int stroke_samples = 3600;
};

/// Object definition; `center` empty means the seated default pose.
struct ObjectSpec {
  ShapeKind kind = ShapeKind::Circle;
  double a = 0.0;  // circle diameter, box width, plate thickness
  double b = 0.0;  // box height, plate width; 0 = default
  std::optional<Point2> center;
};

struct RunConfig {
  std::string comment;
  FingerParams finger;
  TraceSettings trace;
  PinchSettings pinch;
  EnvelopeSettings envelope;
  HandSettings hand;
  std::map<std::string, ObjectSpec> objects;
  SynthesisSpec synthesis;
  std::string output_dir = "out";

  HandConfig hand_config() const;
};

/// Throws Error(Config) naming the offending key path.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig load_config(const std::string& path);

/// Validates every module invariant reachable from the config.
void validate(const RunConfig& cfg);

/// 16 hex digits of FNV-1a over the canonical JSON form.
std::string config_hash(const RunConfig& cfg);

/// `KIND:DIM[:X,Y]` (box accepts `WxH`) or the name of a configured object.
ObjectSpec parse_object(const std::string& text, const RunConfig& cfg);
ObjectShape make_object(const ObjectSpec& spec, const HandConfig& hand);

}  // namespace hoeckend::io
