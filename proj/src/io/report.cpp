#include "hoeckend/io/report.hpp"

#include <sstream>

#include "hoeckend/io/output.hpp"

namespace hoeckend::io {

using json = nlohmann::ordered_json;

namespace {

// Six-decimal rounding keeps the report byte-stable and readable.
double round6(double v) { return std::stod(format_fixed(v)); }

}  // namespace

json outcome_json(const GraspOutcome& outcome, const ObjectShape& obj,
                  const std::string& config_hash) {
  json j;
  // JSON has no comments, so the header line travels as the first member.
  j["header"] = header_line(config_hash).substr(2, header_line(config_hash).size() - 3);
  j["object"] = obj.describe();
  j["mode"] = to_string(outcome.mode);
  j["contacts"] = json::array();
  for (const Contact& c : outcome.contacts) {
    j["contacts"].push_back({{"finger", c.finger},
                             {"link", to_string(c.link)},
                             {"x_mm", round6(c.point.x)},
                             {"y_mm", round6(c.point.y)},
                             {"force_N", round6(c.force)}});
  }
  j["fingers"] = json::array();
  for (const FingerOutcome& f : outcome.fingers) {
    json fj{{"contacted", f.contacted},
            {"mode", to_string(f.state.mode)},
            {"crank_deg", round6(rad_to_deg(f.crank_angle))},
            {"theta1_deg", round6(rad_to_deg(f.state.theta1))},
            {"theta2_deg", round6(rad_to_deg(f.state.theta2))}};
    if (f.transition) fj["transition_deg"] = round6(rad_to_deg(*f.transition));
    if (f.envelope) {
      fj["F2_N"] = round6(f.envelope->F2);
      fj["F3_N"] = round6(f.envelope->F3);
    }
    if (f.pinch_force) fj["F1_N"] = round6(*f.pinch_force);
    j["fingers"].push_back(fj);
  }
  return j;
}

std::string trajectory_csv(const GraspOutcome& outcome, const std::string& config_hash) {
  std::ostringstream out;
  out << header_line(config_hash) << "finger,crank_deg,theta1_deg,theta2_deg,mode\n";
  for (const TrajectorySample& s : outcome.trajectory) {
    out << s.finger << ',' << format_fixed(rad_to_deg(s.crank_angle)) << ','
        << format_fixed(rad_to_deg(s.theta1)) << ',' << format_fixed(rad_to_deg(s.theta2)) << ','
        << to_string(s.mode) << '\n';
  }
  return out.str();
}

}  // namespace hoeckend::io
