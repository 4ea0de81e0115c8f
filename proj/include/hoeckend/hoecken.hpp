#pragma once

#include <vector>

#include "hoeckend/planar.hpp"

namespace hoeckend {

/// Crank AB (length l) about fixed pivot A, coupler BD sliding through the
/// fixed slider C. Defaults follow the prototype: l = 30 mm, l_AC = 1.5 l,
/// l_BD = 6 l, C directly above A.
struct HoeckenDims {
  double l = 30.0;
  double l_BD = 180.0;
  Point2 A{0.0, 0.0};
  Point2 C{0.0, 45.0};

  static HoeckenDims from_lengths(double l, double l_AC, double l_BD, Point2 A = {0.0, 0.0});
  static HoeckenDims from_ratios(double l, double ac_ratio, double bd_ratio);

  double l_AC() const { return distance(A, C); }
  bool valid() const;
  /// Throws InvalidArgument naming the violated invariant.
  void validate() const;
};

struct LinkagePose {
  Point2 B;
  Point2 D;
};

/// D lies on the ray from B through C, l_BD from B (beyond the slider).
LinkagePose solve_position(const HoeckenDims& dims, double theta_A);

/// Inclination of the coupler (B toward C) from +y, positive toward +x.
double coupler_inclination(const HoeckenDims& dims, double theta_A);

struct PathSample {
  double theta;
  Point2 B;
  Point2 D;
};

struct PathTrace {
  std::vector<PathSample> samples;
  HoeckenDims dims;
};

/// `n` uniformly spaced crank angles, both ends inclusive. OpenMP over samples.
PathTrace trace_path(const HoeckenDims& dims, double theta_start, double theta_end, int n);
/// Single-threaded reference for `trace_path`.
PathTrace trace_path_serial(const HoeckenDims& dims, double theta_start, double theta_end, int n);

struct FlatSegment {
  double theta_lo;
  double theta_hi;  // >= theta_lo; exceeds the trace end when the window wraps
  double max_dev;
  double x_travel;
};

/// Contiguous crank interval with the smallest vertical band of D among those
/// whose horizontal D travel (max - min) reaches `min_x_travel`. A trace that
/// spans a full revolution is scanned cyclically. Throws InsufficientTravel.
FlatSegment flattest_segment(const PathTrace& trace, double min_x_travel);

/// Central difference, step 1e-6 rad.
double dxD_dthetaA(const HoeckenDims& dims, double theta_A);

}  // namespace hoeckend
