#include "hoeckend/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "hoeckend/error.hpp"
#include "hoeckend/hoecken.hpp"

namespace hoeckend {

double straightness_objective(double ac_ratio, double bd_ratio, double min_travel_units,
                              int samples) {
  const HoeckenDims dims = HoeckenDims::from_ratios(1.0, ac_ratio, bd_ratio);
  if (!dims.valid()) return std::numeric_limits<double>::infinity();
  try {
    const PathTrace trace = trace_path(dims, 0.0, 2.0 * kPi, samples + 1);
    return flattest_segment(trace, min_travel_units).max_dev;
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

namespace {

struct Vertex {
  std::array<double, 2> x;
  double f;
};

}  // namespace

SynthesisResult synthesize(const SynthesisSpec& spec) {
  if (!(spec.ac_min <= spec.ac_max) || !(spec.bd_min <= spec.bd_max)) {
    fail(ErrorKind::InvalidArgument, "synthesis bounds must satisfy min <= max");
  }
  if (!(spec.ac_min <= 1.5 && 1.5 <= spec.ac_max && spec.bd_min <= 6.0 && 6.0 <= spec.bd_max)) {
    fail(ErrorKind::InvalidArgument, "synthesis bounds must contain the nominal ratios (1.5, 6.0)");
  }
  if (spec.budget < 20) fail(ErrorKind::InvalidArgument, "synthesis budget must be at least 20");
  if (spec.samples < 360) fail(ErrorKind::InvalidArgument, "synthesis needs at least 360 samples");

  const std::array<double, 2> lo{spec.ac_min, spec.bd_min};
  const std::array<double, 2> hi{spec.ac_max, spec.bd_max};
  auto clamp = [&](std::array<double, 2> x) {
    for (int i = 0; i < 2; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
  };

  SynthesisResult result{1.5, 6.0, std::numeric_limits<double>::infinity(), false, {}, {}};
  auto evaluate = [&](std::array<double, 2> x) {
    const double f = straightness_objective(x[0], x[1], spec.min_travel_units, spec.samples);
    const int idx = static_cast<int>(result.log.size());
    result.log.push_back({idx, x[0], x[1], f, std::isfinite(f)});
    if (f < result.deviation) {
      result.deviation = f;
      result.ac_ratio = x[0];
      result.bd_ratio = x[1];
    }
    result.incumbent.push_back(result.deviation);
    return f;
  };
  auto exhausted = [&] { return static_cast<int>(result.log.size()) >= spec.budget; };

  const std::array<double, 2> x0{1.5, 6.0};
  std::array<Vertex, 3> simplex;
  simplex[0] = {x0, evaluate(x0)};
  for (int i = 0; i < 2; ++i) {
    std::array<double, 2> x = x0;
    x[i] *= 1.05;
    x = clamp(x);
    simplex[static_cast<std::size_t>(i) + 1] = {x, evaluate(x)};
  }

  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  while (true) {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    const double frange = simplex[2].f - simplex[0].f;
    double size = 0.0;
    for (int v = 1; v < 3; ++v) {
      for (int i = 0; i < 2; ++i) {
        size = std::max(size, std::abs(simplex[v].x[i] - simplex[0].x[i]));
      }
    }
    const bool flat = frange <= 1e-12 || !std::isfinite(frange);
    if (flat && size <= 1e-9) break;
    if (exhausted()) {
      result.budget_exhausted = true;
      break;
    }

    std::array<double, 2> centroid{};
    for (int i = 0; i < 2; ++i) centroid[i] = 0.5 * (simplex[0].x[i] + simplex[1].x[i]);
    auto along = [&](double t) {
      std::array<double, 2> x{};
      for (int i = 0; i < 2; ++i) x[i] = centroid[i] + t * (simplex[2].x[i] - centroid[i]);
      return clamp(x);
    };

    const std::array<double, 2> xr = along(-kReflect);
    const double fr = evaluate(xr);
    if (fr < simplex[0].f) {
      if (exhausted()) {
        simplex[2] = {xr, fr};
        continue;
      }
      const std::array<double, 2> xe = along(-kExpand);
      const double fe = evaluate(xe);
      simplex[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[1].f) {
      simplex[2] = {xr, fr};
      continue;
    }
    if (exhausted()) continue;
    const bool outside = fr < simplex[2].f;
    const std::array<double, 2> xc = along(outside ? -kContract : kContract);
    const double fc = evaluate(xc);
    if (fc < std::min(fr, simplex[2].f)) {
      simplex[2] = {xc, fc};
      continue;
    }
    for (int v = 1; v < 3 && !exhausted(); ++v) {
      std::array<double, 2> x{};
      for (int i = 0; i < 2; ++i) {
        x[i] = simplex[0].x[i] + kShrink * (simplex[v].x[i] - simplex[0].x[i]);
      }
      x = clamp(x);
      simplex[v] = {x, evaluate(x)};
    }
  }
  return result;
}

}  // namespace hoeckend
