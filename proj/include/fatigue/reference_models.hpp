#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fatigue/muscle.hpp"

namespace fatigue::refmodels {

// Motor-unit compartment model (Liu): units are activated by brain drive,
// activated units fatigue, fatigued units recover. All rates in 1/s.
struct LiuParams {
  double total_units;    // M0, > 0
  double fatigue_rate;   // F, > 0
  double recovery_rate;  // R, >= 0
  double brain_rate;     // B, >= 0

  LiuParams(double total_units, double fatigue_rate, double recovery_rate,
            double brain_rate);

  double beta() const { return brain_rate / fatigue_rate; }
  double gamma() const { return recovery_rate / fatigue_rate; }
};

struct LiuState {
  double activated;
  double fatigued;
  double resting;
};

struct LiuFractions {
  double activated;  // M_A / M0
  double resting;    // M_uc / M0
};

// Exact solution from the all-resting initial state. Throws
// std::domain_error when beta == 1 + gamma (degenerate denominator); use
// liu_simulate for that parameter line.
LiuFractions liu_closed_form(const LiuParams& params, double t);

// RK4 trajectory of (activated, fatigued) from (0, 0); resting is the
// remainder, so the unit count is conserved by construction.
std::vector<std::pair<double, LiuState>> liu_simulate(const LiuParams& params,
                                                      double t_end,
                                                      double step);

// Non-fatigued fraction in the no-recovery, saturated-drive limit:
// exp(-fatigue_rate * t).
double liu_limit_capacity(double fatigue_rate, double t);

// Capacity-reservoir model (Freund-Takala): remaining capacity recovers
// toward the force limit and decays with the exerted force.
//   ds/dt = recovery_rate * (force_limit - s) - decay_rate * S(t)
struct FreundTakalaParams {
  double force_limit;    // newtons, > 0
  double decay_rate;     // >= 0
  double recovery_rate;  // >= 0

  FreundTakalaParams(double force_limit, double decay_rate,
                     double recovery_rate);
};

struct TimeValue {
  double t;
  double value;
};

struct ReservoirTrajectory {
  std::vector<TimeValue> samples;
  // First sample time at which the capacity left [0, force_limit], if any.
  // Values are reported unclamped.
  std::optional<double> first_out_of_range;
};

// RK4 over [0, t_end] in minutes; the exerted force profile must cover the
// horizon and its segment boundaries are mandatory step endpoints.
ReservoirTrajectory freund_takala_simulate(const FreundTakalaParams& params,
                                           const LoadProfile& exerted,
                                           double initial_capacity,
                                           double t_end, double step);

struct CurveComparison {
  double max_abs_diff;
  double pearson_r;
};

// Both curves must share the same time grid.
CurveComparison compare_capacity_curves(const std::vector<TimeValue>& a,
                                        const std::vector<TimeValue>& b);

}  // namespace fatigue::refmodels
