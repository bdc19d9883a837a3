#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatigue::ode {

struct OdeSystem {
  int dimension = 0;
  std::function<std::vector<double>(double t, const std::vector<double>& y)>
      vector_field;
};

// Raised when the vector field produces a non-finite derivative; t() is the
// evaluation time that failed.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t);
  double t() const { return t_; }

 private:
  double t_;
};

struct StatePoint {
  double t;
  std::vector<double> y;
};

// Classical fixed-step 4th-order Runge-Kutta from t0 to t1. States are
// sampled every h; the final step is shortened so the last sample lands
// exactly on t1.
std::vector<StatePoint> rk4_integrate(const OdeSystem& system,
                                      const std::vector<double>& y0, double t0,
                                      double t1, double h);

// (f(t+h) - f(t-h)) / (2h).
double central_difference(const std::function<double(double)>& f, double t,
                          double h);

}  // namespace fatigue::ode
