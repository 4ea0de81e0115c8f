// hoeckend: kinematics, grasp-force surfaces, grasp simulation and linkage
// synthesis for a Hoecken-linkage finger.
//
// Exit codes: 0 ok, 2 configuration or usage error, 3 insufficient travel,
// 4 numerical failure, 5 simulation failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hoeckend/error.hpp"
#include "hoeckend/grasp.hpp"
#include "hoeckend/hoecken.hpp"
#include "hoeckend/io/config.hpp"
#include "hoeckend/io/output.hpp"
#include "hoeckend/io/report.hpp"
#include "hoeckend/io/svg.hpp"
#include "hoeckend/sweep.hpp"
#include "hoeckend/synthesis.hpp"

namespace fs = std::filesystem;
using namespace hoeckend;

namespace {

enum Exit { kOk = 0, kConfig = 2, kTravel = 3, kNumeric = 4, kSimulation = 5 };

struct Options {
  std::string config_path;
  std::string out_dir;
  std::string format = "csv";
  std::string grid;
  std::string range;
  int samples = 0;
  std::string object;
  bool trajectory = false;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnknownVariable:
    case ErrorKind::TargetMismatch: return kConfig;
    case ErrorKind::InsufficientTravel: return kTravel;
    case ErrorKind::InvalidObject:
    case ErrorKind::NotEnveloping: return kSimulation;
    default: return kNumeric;
  }
}

io::RunConfig resolve_config(const Options& opt) {
  if (!opt.config_path.empty()) return io::load_config(opt.config_path);
  if (const char* seed = std::getenv("HOECKEN_SEED_DIR"); seed && *seed) {
    const fs::path candidate = fs::path(seed) / "hoeckend.json";
    if (fs::exists(candidate)) return io::load_config(candidate.string());
  }
  io::RunConfig cfg;
  cfg.comment = "built-in defaults; l_AC = 1.5 l = 45 mm, which places the slider at C = (0, 45)";
  return cfg;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t u1 = 0, u2 = 0;
    const std::string r = text.substr(0, x), c = text.substr(x + 1);
    const int rows = std::stoi(r, &u1);
    const int cols = std::stoi(c, &u2);
    if (u1 != r.size() || u2 != c.size()) throw std::invalid_argument(text);
    return {rows, cols};
  } catch (const std::exception&) {
    fail(ErrorKind::Config, "key '--grid': expected RxC, got '" + text + "'");
  }
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    fail(ErrorKind::Config, "key '--range': expected DEG:DEG, got '" + text + "'");
  }
}

bool want_svg(const Options& opt) {
  if (opt.format == "csv") return false;
  if (opt.format == "csv+svg") return true;
  fail(ErrorKind::Config, "key '--format': expected csv or csv+svg");
}

std::string out_path(const io::RunConfig& cfg, const Options& opt, const std::string& name) {
  const std::string dir = opt.out_dir.empty() ? cfg.output_dir : opt.out_dir;
  return (fs::path(dir) / name).string();
}

SweepContext sweep_context(const io::RunConfig& cfg) {
  SweepContext ctx;
  ctx.finger = cfg.finger;
  ctx.tau_A = cfg.pinch.tau_A;
  const ConstantPinchModel def = default_pinch_model(cfg.finger);
  ctx.pinch = {cfg.pinch.J_x.value_or(def.J_x), cfg.pinch.r_eq.value_or(def.r_eq)};
  return ctx;
}

int cmd_trace(io::RunConfig cfg, const Options& opt) {
  if (!opt.range.empty()) {
    std::tie(cfg.trace.range_lo_deg, cfg.trace.range_hi_deg) = parse_range(opt.range);
  }
  if (opt.samples != 0) cfg.trace.samples = opt.samples;
  io::validate(cfg);
  const std::string hash = io::config_hash(cfg);
  const HoeckenDims& dims = cfg.finger.hoecken;

  const PathTrace metric = trace_path(dims, 0.0, 2.0 * kPi, cfg.trace.metric_samples + 1);
  const FlatSegment seg = flattest_segment(metric, cfg.trace.min_travel_units * dims.l);

  const PathTrace trace = trace_path(dims, deg_to_rad(cfg.trace.range_lo_deg),
                                     deg_to_rad(cfg.trace.range_hi_deg), cfg.trace.samples);
  const std::string csv = out_path(cfg, opt, "trace.csv");
  io::write_atomic(csv, io::trace_csv(trace, hash));
  std::cout << "wrote " << csv << " (" << trace.samples.size() << " rows)\n"
            << "interval_deg=" << io::format_fixed(rad_to_deg(seg.theta_lo)) << ":"
            << io::format_fixed(rad_to_deg(seg.theta_hi)) << "\n"
            << "x_travel_units=" << io::format_fixed(seg.x_travel / dims.l) << "\n"
            << "max_dev_units=" << io::format_fixed(seg.max_dev / dims.l) << "\n"
            << "max_dev_mm=" << io::format_fixed(seg.max_dev) << "\n";
  return kOk;
}

void emit_table(const Table& t, const std::string& csv_path, const std::string& hash, bool svg,
                const io::HeatmapSpec& heat) {
  io::write_atomic(csv_path, io::table_csv(t, hash));
  std::cout << "wrote " << csv_path << " (" << t.rows.size() << " rows)\n";
  if (svg) {
    const std::string svg_path = fs::path(csv_path).replace_extension(".svg").string();
    io::write_atomic(svg_path, io::heatmap_svg(t, heat, hash));
    std::cout << "wrote " << svg_path << "\n";
  }
}

int cmd_pinch(io::RunConfig cfg, const Options& opt) {
  if (!opt.grid.empty()) std::tie(cfg.pinch.rows, cfg.pinch.cols) = parse_grid(opt.grid);
  io::validate(cfg);
  const bool svg = want_svg(opt);
  const std::string hash = io::config_hash(cfg);
  const io::PinchSettings& p = cfg.pinch;
  SweepSpec spec{{{"h2_mm", p.h2_min, p.h2_max, p.rows},
                  {"theta1_deg", p.theta1_min_deg, p.theta1_max_deg, p.cols}},
                 SweepTarget::PinchForce,
                 {}};
  const Table t = run_sweep(spec, sweep_context(cfg));
  emit_table(t, out_path(cfg, opt, "pinch_force.csv"), hash, svg,
             {"Pinch force F1 (N)", 1, 0, 2});
  return kOk;
}

int cmd_envelope(io::RunConfig cfg, const Options& opt) {
  if (!opt.grid.empty()) std::tie(cfg.envelope.rows, cfg.envelope.cols) = parse_grid(opt.grid);
  io::validate(cfg);
  const bool svg = want_svg(opt);
  const std::string hash = io::config_hash(cfg);
  const io::EnvelopeSettings& e = cfg.envelope;
  const std::vector<SweepVariable> vars{{"theta1_deg", e.theta1_min_deg, e.theta1_max_deg, e.rows},
                                        {"theta2_deg", e.theta2_min_deg, e.theta2_max_deg, e.cols}};
  const SweepContext ctx = sweep_context(cfg);
  const Table spring = run_sweep({vars, SweepTarget::SpringAngle, {}}, ctx);
  const Table forces = run_sweep({vars, SweepTarget::EnvelopeForces, {}}, ctx);
  emit_table(spring, out_path(cfg, opt, "spring_angle.csv"), hash, svg,
             {"Spring opening angle alpha (deg)", 1, 0, 2});
  emit_table(forces, out_path(cfg, opt, "envelope_forces.csv"), hash, svg,
             {"Envelope force F2 (N)", 1, 0, 2});
  if (svg) {
    const std::string f3 = out_path(cfg, opt, "envelope_forces_F3.svg");
    io::write_atomic(f3, io::heatmap_svg(forces, {"Envelope force F3 (N)", 1, 0, 3}, hash));
    std::cout << "wrote " << f3 << "\n";
  }
  std::size_t infeasible = 0;
  for (bool ok : forces.ok) infeasible += ok ? 0 : 1;
  std::cout << "infeasible_points=" << infeasible << "\n";
  return kOk;
}

int cmd_simulate(const io::RunConfig& cfg, const Options& opt) {
  io::validate(cfg);
  if (opt.object.empty()) fail(ErrorKind::Config, "key '--object': an object is required");
  const HandConfig hand = cfg.hand_config();
  const ObjectShape obj = io::make_object(io::parse_object(opt.object, cfg), hand);
  const std::string hash = io::config_hash(cfg);
  const GraspOutcome outcome = close_on_object(hand, obj, opt.trajectory);

  const std::string json_path = out_path(cfg, opt, "grasp_outcome.json");
  io::write_atomic(json_path, io::outcome_json(outcome, obj, hash).dump(2) + "\n");
  std::cout << "wrote " << json_path << "\n";
  if (opt.trajectory) {
    const std::string traj = out_path(cfg, opt, "trajectory.csv");
    io::write_atomic(traj, io::trajectory_csv(outcome, hash));
    std::cout << "wrote " << traj << "\n";
  }
  std::cout << "object=" << obj.describe() << "\n" << "mode=" << to_string(outcome.mode) << "\n";
  for (const Contact& c : outcome.contacts) {
    std::cout << "contact finger=" << c.finger << " link=" << to_string(c.link)
              << " x_mm=" << io::format_fixed(c.point.x) << " y_mm=" << io::format_fixed(c.point.y)
              << " force_N=" << io::format_fixed(c.force) << "\n";
  }
  return kOk;
}

int cmd_synth(const io::RunConfig& cfg, const Options& opt) {
  io::validate(cfg);
  const std::string hash = io::config_hash(cfg);
  const SynthesisResult r = synthesize(cfg.synthesis);
  const std::string csv = out_path(cfg, opt, "synthesis_log.csv");
  io::write_atomic(csv, io::synthesis_csv(r, hash));
  std::cout << "wrote " << csv << " (" << r.log.size() << " evaluations)\n"
            << "lAC_ratio=" << io::format_fixed(r.ac_ratio) << "\n"
            << "lBD_ratio=" << io::format_fixed(r.bd_ratio) << "\n"
            << "deviation_units=" << io::format_fixed(r.deviation) << "\n"
            << "status=" << (r.budget_exhausted ? "BudgetExhausted" : "Converged") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hoecken-linkage finger analysis toolkit"};
  app.require_subcommand(1);
  Options opt;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON configuration file");
    sub->add_option("--out", opt.out_dir, "Output directory");
  };

  CLI::App* trace = app.add_subcommand("trace", "Trace point D and report the flattest window");
  common(trace);
  trace->add_option("--range", opt.range, "Crank range DEG:DEG");
  trace->add_option("--samples", opt.samples, "Number of samples");

  CLI::App* pinch = app.add_subcommand("pinch", "Pinch force surface F1(h2, theta1)");
  common(pinch);
  pinch->add_option("--grid", opt.grid, "Grid size RxC (h2 x theta1)");
  pinch->add_option("--format", opt.format, "csv or csv+svg");

  CLI::App* envelope = app.add_subcommand("envelope", "Spring angle and envelope force surfaces");
  common(envelope);
  envelope->add_option("--grid", opt.grid, "Grid size RxC (theta1 x theta2)");
  envelope->add_option("--format", opt.format, "csv or csv+svg");

  CLI::App* simulate = app.add_subcommand("simulate", "Close the hand on an object");
  common(simulate);
  simulate->add_option("--object", opt.object, "KIND:DIM[:X,Y] or a configured object name");
  simulate->add_flag("--trajectory", opt.trajectory, "Also write the sampled trajectory");

  CLI::App* synth = app.add_subcommand("synth", "Optimise the straight-line ratios");
  common(synth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    const io::RunConfig cfg = resolve_config(opt);
    if (*trace) return cmd_trace(cfg, opt);
    if (*pinch) return cmd_pinch(cfg, opt);
    if (*envelope) return cmd_envelope(cfg, opt);
    if (*simulate) return cmd_simulate(cfg, opt);
    if (*synth) return cmd_synth(cfg, opt);
  } catch (const Error& e) {
    std::cerr << "hoeckend: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "hoeckend: " << e.what() << "\n";
    return kNumeric;
  }
  return kOk;
}
