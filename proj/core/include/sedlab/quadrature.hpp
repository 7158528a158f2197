#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace sedlab {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_intervals = 4096;  // refinement budget
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

// Raised when an adaptive integral fails to reach its tolerance within the
// interval budget; carries the best estimate for diagnostics.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadratureResult best_estimate;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b]: the interval with the
// largest Kronrod error estimate is bisected until the summed error meets
// max(abs_tol, rel_tol * |integral|) or the budget runs out. Integrands here
// are smooth away from a known resonance, so callers pass split points that
// straddle the peak instead of relying on blind refinement.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec = {});

// Same, with the initial subdivision given by `points` (ascending; first and
// last are the integration limits).
QuadratureResult integrate_segments(const std::function<double(double)>& f,
                                    std::span<const double> points,
                                    const QuadratureSpec& spec = {});

// Non-adaptive 15-point Gauss-Kronrod on one interval; used for per-bin mode
// amplitudes where the integrand is smooth by construction.
double gauss_kronrod_15(const std::function<double(double)>& f, double a,
                        double b);

}  // namespace sedlab
