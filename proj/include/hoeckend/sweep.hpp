#pragma once

#include <map>
#include <string>
#include <vector>

#include "hoeckend/finger.hpp"
#include "hoeckend/force.hpp"

namespace hoeckend {

enum class SweepTarget { PinchForce, SpringAngle, EnvelopeForces, Deviation };

const char* to_string(SweepTarget target);
SweepTarget parse_target(const std::string& name);

/// Swept variables: h2_mm, theta1_deg, theta2_deg, lAC_ratio, lBD_ratio.
struct SweepVariable {
  std::string name;
  double min;
  double max;
  int count;
};

struct SweepSpec {
  std::vector<SweepVariable> variables;
  SweepTarget target = SweepTarget::PinchForce;
  /// Parameter overrides: tau_A, J_x, r_eq, l1, h1, h2_env, k_d, tau1, AH,
  /// BH, min_travel_units, or a fixed value for an unswept variable.
  std::map<std::string, double> fixed;
};

/// Baseline parameters a sweep starts from before applying `fixed`.
struct SweepContext {
  FingerParams finger;
  double tau_A = 400.0;
  ConstantPinchModel pinch{};  // zero J_x selects default_pinch_model(finger)
  double min_travel_units = 5.18;
  int deviation_samples = 3600;
};

/// Rows in row-major order over the declared variables (first is outermost).
/// Columns follow the target's CSV contract; `ok[i]` is false for points the
/// model cannot evaluate, whose outputs are NaN.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<bool> ok;
};

/// Grid cells evaluated with OpenMP; output order independent of scheduling.
Table run_sweep(const SweepSpec& spec, const SweepContext& ctx);
/// Single-threaded reference for `run_sweep`.
Table run_sweep_serial(const SweepSpec& spec, const SweepContext& ctx);

std::vector<std::string> target_columns(SweepTarget target);

}  // namespace hoeckend
