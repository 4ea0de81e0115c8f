#pragma once

#include <vector>

namespace hoeckend {

/// Dimensional synthesis of the straight-line stage over (l_AC/l, l_BD/l).
struct SynthesisSpec {
  double ac_min = 1.3;
  double ac_max = 1.7;
  double bd_min = 5.0;
  double bd_max = 7.0;
  double min_travel_units = 5.18;
  int budget = 200;
  int samples = 3600;
};

struct SynthesisEval {
  int index;
  double ac_ratio;
  double bd_ratio;
  double deviation;  // units of l; +inf when infeasible
  bool ok;
};

struct SynthesisResult {
  double ac_ratio;
  double bd_ratio;
  double deviation;
  bool budget_exhausted;
  std::vector<SynthesisEval> log;
  std::vector<double> incumbent;  // best objective after each evaluation
};

/// Vertical band of the flattest window with travel >= min_travel_units, for
/// l = 1. Infeasible ratios or insufficient travel give +inf.
double straightness_objective(double ac_ratio, double bd_ratio, double min_travel_units,
                              int samples);

/// Bounded Nelder-Mead from (1.5, 6.0) with a fixed +5% initial simplex.
SynthesisResult synthesize(const SynthesisSpec& spec);

}  // namespace hoeckend
