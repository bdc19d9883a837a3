#pragma once

#include <vector>

namespace fatigue {

// Per-muscle constants: maximum voluntary contraction in newtons and the
// fatigue rate constant k in 1/min.
struct MuscleParams {
  double mvc;
  double k;

  explicit MuscleParams(double mvc_newtons, double k_per_min = 1.0);
};

// Load expressed as a fraction of MVC, restricted to (0, 1].
class NormalizedLoad {
 public:
  explicit NormalizedLoad(double fraction);
  double value() const { return value_; }

 private:
  double value_;
};

struct LoadSegment {
  double duration;  // minutes, > 0
  double load;      // newtons, >= 0
};

// Piecewise-constant external load history. Segment i covers the half-open
// interval [end(i-1), end(i)), so the load at a boundary instant belongs to
// the segment that starts there.
class LoadProfile {
 public:
  explicit LoadProfile(std::vector<LoadSegment> segments);

  const std::vector<LoadSegment>& segments() const { return segments_; }

  // Cumulative segment end times; back() is the total duration.
  const std::vector<double>& boundaries() const { return boundaries_; }
  double total_duration() const { return boundaries_.back(); }

  // Load at time t in [0, total_duration()]. At the exact end of the
  // profile this returns the last segment's load.
  double load_at(double t) const;

 private:
  std::vector<LoadSegment> segments_;
  std::vector<double> boundaries_;
};

}  // namespace fatigue
