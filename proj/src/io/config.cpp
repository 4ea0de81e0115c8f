#include "hoeckend/io/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "hoeckend/error.hpp"

namespace hoeckend::io {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& key, const std::string& what) {
  fail(ErrorKind::Config, "key '" + key + "': " + what);
}

// Reads members of one JSON object and rejects any key nobody asked for.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) config_error(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string key(const char* name) const { return path_.empty() ? name : path_ + "." + name; }

  const json* get(const char* name) {
    seen_.insert(name);
    const auto it = j_.find(name);
    return it == j_.end() ? nullptr : &*it;
  }

  double number(const char* name, double def) {
    const json* v = get(name);
    if (!v) return def;
    if (!v->is_number()) config_error(key(name), "expected a number");
    const double d = v->get<double>();
    if (!std::isfinite(d)) config_error(key(name), "must be finite");
    return d;
  }

  int integer(const char* name, int def) {
    const json* v = get(name);
    if (!v) return def;
    if (!v->is_number_integer()) config_error(key(name), "expected an integer");
    return v->get<int>();
  }

  bool boolean(const char* name, bool def) {
    const json* v = get(name);
    if (!v) return def;
    if (!v->is_boolean()) config_error(key(name), "expected true or false");
    return v->get<bool>();
  }

  std::string string(const char* name, const std::string& def) {
    const json* v = get(name);
    if (!v) return def;
    if (!v->is_string()) config_error(key(name), "expected a string");
    return v->get<std::string>();
  }

  std::pair<double, double> pair(const char* name, std::pair<double, double> def) {
    const json* v = get(name);
    if (!v) return def;
    if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
      config_error(key(name), "expected a two-number array");
    }
    return {(*v)[0].get<double>(), (*v)[1].get<double>()};
  }

  Point2 point(const char* name, Point2 def) {
    const auto p = pair(name, {def.x, def.y});
    return {p.first, p.second};
  }

  std::optional<double> number_or_auto(const char* name, std::optional<double> def) {
    const json* v = get(name);
    if (!v) return def;
    if (v->is_string() && v->get<std::string>() == "auto") return std::nullopt;
    if (!v->is_number()) config_error(key(name), "expected a number or \"auto\"");
    return v->get<double>();
  }

  void finish() const {
    for (const auto& [k, _] : j_.items()) {
      if (!seen_.count(k)) config_error(key(k.c_str()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename Fn>
void with_section(Section& parent, const char* name, Fn fn) {
  if (const json* v = parent.get(name)) {
    Section s(*v, parent.key(name));
    fn(s);
    s.finish();
  }
}

ShapeKind parse_kind(const std::string& text, const std::string& key) {
  if (text == "circle") return ShapeKind::Circle;
  if (text == "box") return ShapeKind::Box;
  if (text == "plate") return ShapeKind::ThinPlate;
  config_error(key, "unknown object kind '" + text + "' (circle, box, plate)");
}

json pair_json(double a, double b) { return json::array({a, b}); }

}  // namespace

HandConfig RunConfig::hand_config() const {
  HandConfig h;
  h.finger = finger;
  h.span = hand.span;
  h.step = deg_to_rad(hand.step_deg);
  h.symmetric = hand.symmetric;
  h.tau_A = pinch.tau_A;
  h.stroke_travel = hand.stroke_travel_units;
  h.stroke_samples = hand.stroke_samples;
  h.seat_offset = hand.seat_offset;
  return h;
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  Section root(j, "");
  cfg.comment = root.string("comment", "");
  cfg.output_dir = root.string("output_dir", cfg.output_dir);

  with_section(root, "hoecken", [&](Section& s) {
    const HoeckenDims d = cfg.finger.hoecken;
    const double l = s.number("l", d.l);
    const double l_AC = s.number("l_AC", d.l_AC());
    const double l_BD = s.number("l_BD", d.l_BD);
    const Point2 A = s.point("A", d.A);
    cfg.finger.hoecken = HoeckenDims::from_lengths(l, l_AC, l_BD, A);
  });

  with_section(root, "finger", [&](Section& s) {
    FingerParams& f = cfg.finger;
    f.AH = s.number("AH", f.AH);
    f.BH = s.number("BH", f.BH);
    f.AB0 = s.number("AB0", f.AB0);
    f.EF = s.number("EF", f.EF);
    f.E = s.point("E", f.E);
    f.l1 = s.number("l1", f.l1);
    f.h1 = s.number("h1", f.h1);
    f.h2_env = s.number("h2_env", f.h2_env);
    f.k_d = s.number("k_d", f.k_d);
    f.tau1 = s.number("tau1", f.tau1);
    f.distal_length = s.number("distal_length", f.distal_length);
    if (const json* v = s.get("stopper_preload")) {
      if (v->is_string() && v->get<std::string>() == "inf") {
        f.stopper_preload = std::numeric_limits<double>::infinity();
      } else if (v->is_number()) {
        f.stopper_preload = v->get<double>();
      } else {
        config_error(s.key("stopper_preload"), "expected a number or \"inf\"");
      }
    }
  });

  with_section(root, "trace", [&](Section& s) {
    TraceSettings& t = cfg.trace;
    std::tie(t.range_lo_deg, t.range_hi_deg) = s.pair("range_deg", {t.range_lo_deg, t.range_hi_deg});
    t.samples = s.integer("samples", t.samples);
    t.min_travel_units = s.number("min_travel_units", t.min_travel_units);
    t.metric_samples = s.integer("metric_samples", t.metric_samples);
  });

  with_section(root, "pinch", [&](Section& s) {
    PinchSettings& p = cfg.pinch;
    p.tau_A = s.number("tau_A", p.tau_A);
    p.J_x = s.number_or_auto("J_x", p.J_x);
    p.r_eq = s.number_or_auto("r_eq", p.r_eq);
    std::tie(p.h2_min, p.h2_max) = s.pair("h2_mm", {p.h2_min, p.h2_max});
    std::tie(p.theta1_min_deg, p.theta1_max_deg) =
        s.pair("theta1_deg", {p.theta1_min_deg, p.theta1_max_deg});
    const auto grid = s.pair("grid", {p.rows, p.cols});
    p.rows = static_cast<int>(grid.first);
    p.cols = static_cast<int>(grid.second);
  });

  with_section(root, "envelope", [&](Section& s) {
    EnvelopeSettings& e = cfg.envelope;
    std::tie(e.theta1_min_deg, e.theta1_max_deg) =
        s.pair("theta1_deg", {e.theta1_min_deg, e.theta1_max_deg});
    std::tie(e.theta2_min_deg, e.theta2_max_deg) =
        s.pair("theta2_deg", {e.theta2_min_deg, e.theta2_max_deg});
    const auto grid = s.pair("grid", {e.rows, e.cols});
    e.rows = static_cast<int>(grid.first);
    e.cols = static_cast<int>(grid.second);
  });

  with_section(root, "hand", [&](Section& s) {
    HandSettings& h = cfg.hand;
    h.span = s.number("span", h.span);
    h.step_deg = s.number("step_deg", h.step_deg);
    h.symmetric = s.boolean("symmetric", h.symmetric);
    h.seat_offset = s.number("seat_offset", h.seat_offset);
    h.stroke_travel_units = s.number("stroke_travel_units", h.stroke_travel_units);
    h.stroke_samples = s.integer("stroke_samples", h.stroke_samples);
  });

  with_section(root, "objects", [&](Section& s) {
    for (const auto& [name, body] : j.at("objects").items()) {
      const json* v = s.get(name.c_str());
      Section o(*v, s.key(name.c_str()));
      ObjectSpec spec;
      spec.kind = parse_kind(o.string("kind", "circle"), o.key("kind"));
      switch (spec.kind) {
        case ShapeKind::Circle: spec.a = o.number("diameter", 0.0); break;
        case ShapeKind::Box:
          spec.a = o.number("width", 0.0);
          spec.b = o.number("height", 0.0);
          break;
        case ShapeKind::ThinPlate:
          spec.a = o.number("thickness", 0.0);
          spec.b = o.number("width", 0.0);
          break;
      }
      if (o.get("center")) spec.center = o.point("center", {});
      o.finish();
      cfg.objects[name] = spec;
    }
  });

  with_section(root, "synthesis", [&](Section& s) {
    SynthesisSpec& y = cfg.synthesis;
    std::tie(y.ac_min, y.ac_max) = s.pair("lAC_ratio", {y.ac_min, y.ac_max});
    std::tie(y.bd_min, y.bd_max) = s.pair("lBD_ratio", {y.bd_min, y.bd_max});
    y.min_travel_units = s.number("min_travel_units", y.min_travel_units);
    y.budget = s.integer("budget", y.budget);
    y.samples = s.integer("samples", y.samples);
  });

  root.finish();
  validate(cfg);
  return cfg;
}

json config_to_json(const RunConfig& cfg) {
  const FingerParams& f = cfg.finger;
  json j;
  j["comment"] = cfg.comment;
  j["output_dir"] = cfg.output_dir;
  j["hoecken"] = {{"l", f.hoecken.l},
                  {"l_AC", f.hoecken.l_AC()},
                  {"l_BD", f.hoecken.l_BD},
                  {"A", pair_json(f.hoecken.A.x, f.hoecken.A.y)}};
  j["finger"] = {{"AH", f.AH},         {"BH", f.BH},         {"AB0", f.AB0},
                 {"EF", f.EF},         {"E", pair_json(f.E.x, f.E.y)},
                 {"l1", f.l1},         {"h1", f.h1},         {"h2_env", f.h2_env},
                 {"k_d", f.k_d},       {"tau1", f.tau1},     {"distal_length", f.distal_length}};
  j["finger"]["stopper_preload"] =
      std::isinf(f.stopper_preload) ? json("inf") : json(f.stopper_preload);
  const TraceSettings& t = cfg.trace;
  j["trace"] = {{"range_deg", pair_json(t.range_lo_deg, t.range_hi_deg)},
                {"samples", t.samples},
                {"min_travel_units", t.min_travel_units},
                {"metric_samples", t.metric_samples}};
  const PinchSettings& p = cfg.pinch;
  j["pinch"] = {{"tau_A", p.tau_A},
                {"J_x", p.J_x ? json(*p.J_x) : json("auto")},
                {"r_eq", p.r_eq ? json(*p.r_eq) : json("auto")},
                {"h2_mm", pair_json(p.h2_min, p.h2_max)},
                {"theta1_deg", pair_json(p.theta1_min_deg, p.theta1_max_deg)},
                {"grid", json::array({p.rows, p.cols})}};
  const EnvelopeSettings& e = cfg.envelope;
  j["envelope"] = {{"theta1_deg", pair_json(e.theta1_min_deg, e.theta1_max_deg)},
                   {"theta2_deg", pair_json(e.theta2_min_deg, e.theta2_max_deg)},
                   {"grid", json::array({e.rows, e.cols})}};
  const HandSettings& h = cfg.hand;
  j["hand"] = {{"span", h.span},
               {"step_deg", h.step_deg},
               {"symmetric", h.symmetric},
               {"seat_offset", h.seat_offset},
               {"stroke_travel_units", h.stroke_travel_units},
               {"stroke_samples", h.stroke_samples}};
  j["objects"] = json::object();
  for (const auto& [name, o] : cfg.objects) {
    json body;
    body["kind"] = to_string(o.kind);
    switch (o.kind) {
      case ShapeKind::Circle: body["diameter"] = o.a; break;
      case ShapeKind::Box:
        body["width"] = o.a;
        body["height"] = o.b;
        break;
      case ShapeKind::ThinPlate:
        body["thickness"] = o.a;
        body["width"] = o.b;
        break;
    }
    if (o.center) body["center"] = pair_json(o.center->x, o.center->y);
    j["objects"][name] = body;
  }
  const SynthesisSpec& y = cfg.synthesis;
  j["synthesis"] = {{"lAC_ratio", pair_json(y.ac_min, y.ac_max)},
                    {"lBD_ratio", pair_json(y.bd_min, y.bd_max)},
                    {"min_travel_units", y.min_travel_units},
                    {"budget", y.budget},
                    {"samples", y.samples}};
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Config, "cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Config, "'" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

void validate(const RunConfig& cfg) {
  auto check = [](bool ok, const char* key, const std::string& what) {
    if (!ok) config_error(key, what);
  };
  try {
    cfg.finger.validate();
  } catch (const Error& e) {
    config_error("finger", e.what());
  }
  const TraceSettings& t = cfg.trace;
  check(t.range_lo_deg < t.range_hi_deg, "trace.range_deg", "start must be below end");
  check(t.samples >= 2, "trace.samples", "must be at least 2");
  check(t.min_travel_units >= 0.0, "trace.min_travel_units", "must be non-negative");
  check(t.metric_samples >= 3600, "trace.metric_samples", "must be at least 3600");
  const PinchSettings& p = cfg.pinch;
  check(p.tau_A > 0.0, "pinch.tau_A", "must be positive");
  check(!p.J_x || *p.J_x > 0.0, "pinch.J_x", "must be positive");
  check(!p.r_eq || *p.r_eq > 0.0, "pinch.r_eq", "must be positive");
  check(p.h2_min <= p.h2_max, "pinch.h2_mm", "min must not exceed max");
  check(p.theta1_min_deg <= p.theta1_max_deg, "pinch.theta1_deg", "min must not exceed max");
  check(p.rows >= 2 && p.cols >= 2, "pinch.grid", "needs at least 2x2");
  const EnvelopeSettings& e = cfg.envelope;
  check(e.theta1_min_deg <= e.theta1_max_deg, "envelope.theta1_deg", "min must not exceed max");
  check(e.theta2_min_deg <= e.theta2_max_deg, "envelope.theta2_deg", "min must not exceed max");
  check(e.rows >= 2 && e.cols >= 2, "envelope.grid", "needs at least 2x2");
  try {
    cfg.hand_config().validate();
  } catch (const Error& ex) {
    config_error("hand", ex.what());
  }
  for (const auto& [name, o] : cfg.objects) {
    check(o.a > 0.0, ("objects." + name).c_str(), "dimension must be positive");
    check(o.kind != ShapeKind::ThinPlate || o.a <= 5.0, ("objects." + name).c_str(),
          "plate thickness must not exceed 5 mm");
  }
  const SynthesisSpec& y = cfg.synthesis;
  check(y.ac_min <= 1.5 && 1.5 <= y.ac_max, "synthesis.lAC_ratio", "bounds must contain 1.5");
  check(y.bd_min <= 6.0 && 6.0 <= y.bd_max, "synthesis.lBD_ratio", "bounds must contain 6.0");
  check(y.budget >= 20, "synthesis.budget", "must be at least 20");
  check(y.samples >= 360, "synthesis.samples", "must be at least 360");
}

std::string config_hash(const RunConfig& cfg) {
  const std::string canonical = config_to_json(cfg).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ObjectSpec parse_object(const std::string& text, const RunConfig& cfg) {
  if (const auto it = cfg.objects.find(text); it != cfg.objects.end()) return it->second;

  const std::string key = "--object";
  const auto colon = text.find(':');
  if (colon == std::string::npos) config_error(key, "expected KIND:DIM[:X,Y], got '" + text + "'");
  ObjectSpec spec;
  spec.kind = parse_kind(text.substr(0, colon), key);
  std::string rest = text.substr(colon + 1);
  std::string pose;
  if (const auto c2 = rest.find(':'); c2 != std::string::npos) {
    pose = rest.substr(c2 + 1);
    rest = rest.substr(0, c2);
  }
  auto to_number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      config_error(key, "'" + s + "' is not a number");
    }
  };
  if (const auto x = rest.find('x'); spec.kind == ShapeKind::Box && x != std::string::npos) {
    spec.a = to_number(rest.substr(0, x));
    spec.b = to_number(rest.substr(x + 1));
  } else {
    spec.a = to_number(rest);
  }
  if (!pose.empty()) {
    const auto comma = pose.find(',');
    if (comma == std::string::npos) config_error(key, "pose must be X,Y");
    spec.center = Point2{to_number(pose.substr(0, comma)), to_number(pose.substr(comma + 1))};
  }
  if (!(spec.a > 0.0)) config_error(key, "dimension must be positive");
  return spec;
}

ObjectShape make_object(const ObjectSpec& spec, const HandConfig& hand) {
  switch (spec.kind) {
    case ShapeKind::Circle:
      return spec.center ? ObjectShape::circle(*spec.center, spec.a) : seated_circle(hand, spec.a);
    case ShapeKind::Box: {
      const double h = spec.b > 0.0 ? spec.b : spec.a;
      return spec.center ? ObjectShape::box(*spec.center, spec.a, h) : seated_box(hand, spec.a, h);
    }
    case ShapeKind::ThinPlate: {
      const double w = spec.b > 0.0 ? spec.b : 20.0;
      return spec.center ? ObjectShape::thin_plate(*spec.center, w, spec.a)
                         : seated_plate(hand, spec.a, w);
    }
  }
  fail(ErrorKind::InvalidObject, "unknown object kind");
}

}  // namespace hoeckend::io
