#include "hoeckend/hoecken.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "hoeckend/error.hpp"

namespace hoeckend {

HoeckenDims HoeckenDims::from_lengths(double l, double l_AC, double l_BD, Point2 A) {
  HoeckenDims d;
  d.l = l;
  d.l_BD = l_BD;
  d.A = A;
  d.C = A + Point2{0.0, l_AC};
  return d;
}

HoeckenDims HoeckenDims::from_ratios(double l, double ac_ratio, double bd_ratio) {
  return from_lengths(l, ac_ratio * l, bd_ratio * l);
}

bool HoeckenDims::valid() const {
  const double ac = l_AC();
  return std::isfinite(l) && std::isfinite(l_BD) && A.finite() && C.finite() && l > 0.0 &&
         ac > l && l_BD > ac + l;
}

void HoeckenDims::validate() const {
  std::ostringstream msg;
  if (!std::isfinite(l) || !std::isfinite(l_BD) || !A.finite() || !C.finite()) {
    msg << "non-finite linkage dimension";
  } else if (!(l > 0.0)) {
    msg << "l must be positive (l=" << l << ")";
  } else if (!(l_AC() > l)) {
    msg << "l_AC must exceed l (l_AC=" << l_AC() << ", l=" << l << ")";
  } else if (!(l_BD > l_AC() + l)) {
    msg << "l_BD must exceed l_AC + l (l_BD=" << l_BD << ")";
  } else {
    return;
  }
  fail(ErrorKind::InvalidArgument, msg.str());
}

LinkagePose solve_position(const HoeckenDims& dims, double theta_A) {
  const Point2 B = dims.A + direction(theta_A) * dims.l;
  const Point2 bc = dims.C - B;
  const Point2 D = B + bc * (dims.l_BD / bc.norm());
  return {B, D};
}

double coupler_inclination(const HoeckenDims& dims, double theta_A) {
  const Point2 B = dims.A + direction(theta_A) * dims.l;
  const Point2 bc = dims.C - B;
  return std::atan2(bc.x, bc.y);
}

namespace {

void check_trace_args(double theta_start, double theta_end, int n) {
  if (!(theta_start < theta_end) || n < 2) {
    fail(ErrorKind::InvalidArgument, "trace needs theta_start < theta_end and n >= 2");
  }
}

inline double sample_angle(double theta_start, double theta_end, int n, int i) {
  if (i == n - 1) return theta_end;
  return theta_start + (theta_end - theta_start) * static_cast<double>(i) / (n - 1);
}

}  // namespace

PathTrace trace_path(const HoeckenDims& dims, double theta_start, double theta_end, int n) {
  check_trace_args(theta_start, theta_end, n);
  PathTrace trace{std::vector<PathSample>(static_cast<std::size_t>(n)), dims};
  PathSample* out = trace.samples.data();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double th = sample_angle(theta_start, theta_end, n, i);
    const LinkagePose pose = solve_position(dims, th);
    out[i] = {th, pose.B, pose.D};
  }
  return trace;
}

PathTrace trace_path_serial(const HoeckenDims& dims, double theta_start, double theta_end, int n) {
  check_trace_args(theta_start, theta_end, n);
  PathTrace trace{{}, dims};
  trace.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double th = sample_angle(theta_start, theta_end, n, i);
    const LinkagePose pose = solve_position(dims, th);
    trace.samples.push_back({th, pose.B, pose.D});
  }
  return trace;
}

namespace {

// Sliding-window extremum over a cyclic index range.
class MonotoneQueue {
 public:
  MonotoneQueue(const std::vector<double>& values, bool track_max)
      : values_(values), max_(track_max) {}

  void push(std::size_t idx) {
    const double v = values_[idx % values_.size()];
    while (!q_.empty() && (max_ ? values_[q_.back() % values_.size()] <= v
                                : values_[q_.back() % values_.size()] >= v)) {
      q_.pop_back();
    }
    q_.push_back(idx);
  }
  void pop_before(std::size_t idx) {
    while (!q_.empty() && q_.front() < idx) q_.pop_front();
  }
  double top() const { return values_[q_.front() % values_.size()]; }

 private:
  const std::vector<double>& values_;
  bool max_;
  std::deque<std::size_t> q_;
};

}  // namespace

FlatSegment flattest_segment(const PathTrace& trace, double min_x_travel) {
  const auto& s = trace.samples;
  if (s.size() < 2) fail(ErrorKind::InvalidArgument, "trace needs at least 2 samples");

  const double span = s.back().theta - s.front().theta;
  const bool cyclic = span >= 2.0 * kPi - 1e-9 &&
                      distance(s.front().D, s.back().D) <= 1e-9 * (1.0 + trace.dims.l_BD);
  // In cyclic mode the duplicated closing sample is dropped and windows may
  // wrap, covering at most one revolution.
  const std::size_t m = cyclic ? s.size() - 1 : s.size();
  const double dtheta = span / static_cast<double>(s.size() - 1);

  std::vector<double> xs(m);
  std::vector<double> ys(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = s[i].D.x;
    ys[i] = s[i].D.y;
  }

  MonotoneQueue xmax(xs, true), xmin(xs, false), ymax(ys, true), ymin(ys, false);
  const std::size_t last = cyclic ? 2 * m - 1 : m;  // exclusive bound on end index
  std::size_t end = 0;                               // next index to push

  FlatSegment best{0.0, 0.0, std::numeric_limits<double>::infinity(), 0.0};
  bool found = false;
  for (std::size_t start = 0; start < m; ++start) {
    if (end < start) end = start;
    xmax.pop_before(start);
    xmin.pop_before(start);
    ymax.pop_before(start);
    ymin.pop_before(start);
    if (end == start) {
      xmax.push(end);
      xmin.push(end);
      ymax.push(end);
      ymin.push(end);
      ++end;
    }
    const std::size_t end_limit = cyclic ? std::min(last, start + m) : last;
    while (xmax.top() - xmin.top() < min_x_travel && end < end_limit) {
      xmax.push(end);
      xmin.push(end);
      ymax.push(end);
      ymin.push(end);
      ++end;
    }
    const double travel = xmax.top() - xmin.top();
    if (travel < min_x_travel) {
      if (!cyclic) break;  // later starts only shrink the reachable window
      continue;
    }
    const double band = ymax.top() - ymin.top();
    if (band < best.max_dev) {
      found = true;
      const double th0 = s[start].theta;
      best = {th0, th0 + dtheta * static_cast<double>(end - 1 - start), band, travel};
    }
  }
  if (!found) {
    std::ostringstream msg;
    msg << "no crank interval reaches horizontal travel " << min_x_travel;
    fail(ErrorKind::InsufficientTravel, msg.str());
  }
  return best;
}

double dxD_dthetaA(const HoeckenDims& dims, double theta_A) {
  constexpr double h = 1e-6;
  const double xp = solve_position(dims, theta_A + h).D.x;
  const double xm = solve_position(dims, theta_A - h).D.x;
  return (xp - xm) / (2.0 * h);
}

}  // namespace hoeckend
