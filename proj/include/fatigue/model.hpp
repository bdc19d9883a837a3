#pragma once

#include <vector>

#include "fatigue/muscle.hpp"

namespace fatigue {

// Exponent cap for the fatigue-index closed form. Arguments beyond this
// raise std::overflow_error instead of silently returning infinity.
inline constexpr double kIndexExpArgCap = 700.0;

// F(t) = integral of load(u)/mvc over [0, t], evaluated segment-wise so the
// result is exact for piecewise-constant profiles.
// Throws std::out_of_range when t is negative or beyond the profile end.
double cumulative_normalized_load(const LoadProfile& profile,
                                  const MuscleParams& params, double t);

// Remaining exertable force capacity mvc * exp(-k * F(t)); equals mvc at
// t = 0 and stays strictly positive.
double capacity_at(const LoadProfile& profile, const MuscleParams& params,
                   double t);

// Accumulated fatigue index U(t) = (exp(2k F(t)) - 1) / (2k), in minutes.
double fatigue_index_at(const LoadProfile& profile, const MuscleParams& params,
                        double t);

// Instantaneous growth rate of the fatigue index,
// (mvc / f_cem) * (f_load / f_cem). Requires 0 < f_cem <= mvc, f_load >= 0.
double fatigue_index_rate(const MuscleParams& params, double f_cem,
                          double f_load);

// Maximum endurance time for a constant load f * mvc: the time at which the
// capacity decays to the load level, -ln(f) / (k f), in minutes.
double met(const MuscleParams& params, NormalizedLoad f);

struct TrajectorySample {
  double t;       // minutes
  double f_load;  // newtons
  double f_cem;   // newtons
  double u;       // minutes
};

// One record per contiguous run of samples where the requested load exceeds
// the remaining capacity. The equations stay defined there, but the muscle
// could not physically exert the load.
struct OverloadWarning {
  double t;
  double f_load;
  double f_cem;
};

struct FatigueTrajectory {
  std::vector<TrajectorySample> samples;
  std::vector<OverloadWarning> overload_warnings;
};

// Samples the closed forms on a uniform grid of sample_step plus every
// segment boundary, starting at 0 and ending at the profile end.
FatigueTrajectory trajectory(const LoadProfile& profile,
                             const MuscleParams& params, double sample_step);

}  // namespace fatigue
