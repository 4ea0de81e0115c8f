#include "hoeckend/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>

#include "hoeckend/error.hpp"
#include "hoeckend/hoecken.hpp"
#include "hoeckend/spring.hpp"
#include "hoeckend/synthesis.hpp"

namespace hoeckend {

const char* to_string(SweepTarget target) {
  switch (target) {
    case SweepTarget::PinchForce: return "PinchForce";
    case SweepTarget::SpringAngle: return "SpringAngle";
    case SweepTarget::EnvelopeForces: return "EnvelopeForces";
    case SweepTarget::Deviation: return "Deviation";
  }
  return "Unknown";
}

SweepTarget parse_target(const std::string& name) {
  for (SweepTarget t : {SweepTarget::PinchForce, SweepTarget::SpringAngle,
                        SweepTarget::EnvelopeForces, SweepTarget::Deviation}) {
    if (name == to_string(t)) return t;
  }
  fail(ErrorKind::UnknownVariable, "unknown sweep target '" + name + "'");
}

std::vector<std::string> target_columns(SweepTarget target) {
  switch (target) {
    case SweepTarget::PinchForce: return {"h2_mm", "theta1_deg", "F1_N"};
    case SweepTarget::SpringAngle:
      return {"theta1_deg", "theta2_deg", "alpha_deg", "tau_d_Nmm", "s1", "s2"};
    case SweepTarget::EnvelopeForces: return {"theta1_deg", "theta2_deg", "F2_N", "F3_N"};
    case SweepTarget::Deviation:
      return {"lAC_ratio", "lBD_ratio", "deviation_units", "x_travel_units"};
  }
  return {};
}

namespace {

const std::set<std::string> kVariables = {"h2_mm", "theta1_deg", "theta2_deg", "lAC_ratio",
                                          "lBD_ratio"};
const std::set<std::string> kParameters = {"tau_A", "J_x", "r_eq", "l1", "h1", "h2_env",
                                           "k_d", "tau1", "AH", "BH", "min_travel_units"};

std::vector<std::string> consumed(SweepTarget target) {
  switch (target) {
    case SweepTarget::PinchForce: return {"h2_mm", "theta1_deg"};
    case SweepTarget::SpringAngle:
    case SweepTarget::EnvelopeForces: return {"theta1_deg", "theta2_deg"};
    case SweepTarget::Deviation: return {"lAC_ratio", "lBD_ratio"};
  }
  return {};
}

// Inputs of one grid cell, indexed like `consumed(target)`.
struct Prepared {
  SweepTarget target;
  FingerParams finger;
  double tau_A;
  ConstantPinchModel pinch;
  double min_travel_units;
  int deviation_samples;
  std::array<double, 2> base;        // value when not swept
  std::vector<int> slot;             // declared variable -> input slot
  std::vector<SweepVariable> vars;
  std::size_t rows;
};

Prepared prepare(const SweepSpec& spec, const SweepContext& ctx) {
  const std::vector<std::string> inputs = consumed(spec.target);
  Prepared p{spec.target, ctx.finger, ctx.tau_A, ctx.pinch, ctx.min_travel_units,
             ctx.deviation_samples, {0.0, 0.0}, {}, spec.variables, 1};
  if (spec.target == SweepTarget::Deviation) p.base = {1.5, 6.0};

  std::set<std::string> seen;
  for (const SweepVariable& v : spec.variables) {
    if (!kVariables.count(v.name)) fail(ErrorKind::UnknownVariable, "unknown variable '" + v.name + "'");
    const auto it = std::find(inputs.begin(), inputs.end(), v.name);
    if (it == inputs.end()) {
      fail(ErrorKind::TargetMismatch,
           "variable '" + v.name + "' is not used by target " + to_string(spec.target));
    }
    if (!seen.insert(v.name).second) {
      fail(ErrorKind::InvalidArgument, "variable '" + v.name + "' swept twice");
    }
    if (v.count < 2 || !(v.min <= v.max) || !std::isfinite(v.min) || !std::isfinite(v.max)) {
      fail(ErrorKind::InvalidArgument, "variable '" + v.name + "' needs count >= 2 and min <= max");
    }
    p.slot.push_back(static_cast<int>(it - inputs.begin()));
    p.rows *= static_cast<std::size_t>(v.count);
  }
  if (spec.variables.size() > 2) {
    fail(ErrorKind::InvalidArgument, "at most two swept variables per surface");
  }

  for (const auto& [name, value] : spec.fixed) {
    const auto it = std::find(inputs.begin(), inputs.end(), name);
    if (it != inputs.end()) {
      p.base[static_cast<std::size_t>(it - inputs.begin())] = value;
    } else if (kVariables.count(name)) {
      fail(ErrorKind::TargetMismatch,
           "fixed variable '" + name + "' is not used by target " + to_string(spec.target));
    } else if (!kParameters.count(name)) {
      fail(ErrorKind::UnknownVariable, "unknown fixed parameter '" + name + "'");
    } else if (name == "tau_A") {
      p.tau_A = value;
    } else if (name == "J_x") {
      p.pinch.J_x = value;
    } else if (name == "r_eq") {
      p.pinch.r_eq = value;
    } else if (name == "l1") {
      p.finger.l1 = value;
    } else if (name == "h1") {
      p.finger.h1 = value;
    } else if (name == "h2_env") {
      p.finger.h2_env = value;
    } else if (name == "k_d") {
      p.finger.k_d = value;
    } else if (name == "tau1") {
      p.finger.tau1 = value;
    } else if (name == "AH") {
      p.finger.AH = value;
    } else if (name == "BH") {
      p.finger.BH = value;
    } else if (name == "min_travel_units") {
      p.min_travel_units = value;
    }
  }
  if (spec.target != SweepTarget::Deviation) p.finger.validate();
  if (!(p.pinch.J_x > 0.0)) {
    const ConstantPinchModel def = default_pinch_model(p.finger);
    p.pinch.J_x = def.J_x;
    if (!(p.pinch.r_eq > 0.0)) p.pinch.r_eq = def.r_eq;
  } else if (!(p.pinch.r_eq > 0.0)) {
    p.pinch.r_eq = default_pinch_model(p.finger).r_eq;
  }
  return p;
}

std::array<double, 2> cell_inputs(const Prepared& p, std::size_t row) {
  std::array<double, 2> in = p.base;
  std::size_t rem = row;
  for (std::size_t k = p.vars.size(); k-- > 0;) {
    const SweepVariable& v = p.vars[k];
    const std::size_t n = static_cast<std::size_t>(v.count);
    const std::size_t i = rem % n;
    rem /= n;
    const double value =
        i + 1 == n ? v.max : v.min + (v.max - v.min) * static_cast<double>(i) / (v.count - 1);
    in[static_cast<std::size_t>(p.slot[k])] = value;
  }
  return in;
}

void evaluate_cell(const Prepared& p, std::size_t row, std::vector<double>& out, bool& ok) {
  const std::array<double, 2> in = cell_inputs(p, row);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ok = true;
  try {
    switch (p.target) {
      case SweepTarget::PinchForce: {
        const double F1 =
            pinch_force_constant(p.pinch, p.tau_A, in[0], deg_to_rad(in[1]), p.finger.l1);
        out = {in[0], in[1], F1};
        break;
      }
      case SweepTarget::SpringAngle: {
        const SpringStateSample s = spring_state(p.finger, deg_to_rad(in[0]), deg_to_rad(in[1]));
        out = {in[0], in[1], rad_to_deg(s.alpha), s.tau_d, s.s1, s.s2};
        break;
      }
      case SweepTarget::EnvelopeForces: {
        const EnvelopeForces f =
            envelope_forces(p.finger, deg_to_rad(in[0]), deg_to_rad(in[1]));
        out = {in[0], in[1], f.F2, f.F3};
        break;
      }
      case SweepTarget::Deviation: {
        const HoeckenDims dims = HoeckenDims::from_ratios(1.0, in[0], in[1]);
        dims.validate();
        const PathTrace trace =
            trace_path_serial(dims, 0.0, 2.0 * kPi, p.deviation_samples + 1);
        const FlatSegment seg = flattest_segment(trace, p.min_travel_units);
        out = {in[0], in[1], seg.max_dev, seg.x_travel};
        break;
      }
    }
  } catch (const Error&) {
    ok = false;
    out.assign(target_columns(p.target).size(), nan);
    out[0] = in[0];
    out[1] = in[1];
  }
}

Table make_table(const Prepared& p) {
  Table t;
  t.columns = target_columns(p.target);
  t.rows.resize(p.rows);
  t.ok.assign(p.rows, false);
  return t;
}

}  // namespace

Table run_sweep(const SweepSpec& spec, const SweepContext& ctx) {
  const Prepared p = prepare(spec, ctx);
  Table t = make_table(p);
  std::vector<char> ok(p.rows, 0);
  const auto n = static_cast<long long>(p.rows);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    bool cell_ok = false;
    evaluate_cell(p, static_cast<std::size_t>(i), t.rows[static_cast<std::size_t>(i)], cell_ok);
    ok[static_cast<std::size_t>(i)] = cell_ok ? 1 : 0;
  }
  for (std::size_t i = 0; i < p.rows; ++i) t.ok[i] = ok[i] != 0;
  return t;
}

Table run_sweep_serial(const SweepSpec& spec, const SweepContext& ctx) {
  const Prepared p = prepare(spec, ctx);
  Table t = make_table(p);
  for (std::size_t i = 0; i < p.rows; ++i) {
    bool cell_ok = false;
    evaluate_cell(p, i, t.rows[i], cell_ok);
    t.ok[i] = cell_ok;
  }
  return t;
}

}  // namespace hoeckend
