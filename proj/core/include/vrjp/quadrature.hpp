#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace vrjp {

/// Raised when the panel-doubling refinement fails to converge. Carries the
/// last two estimates so callers can see how far apart the ladder stalled.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(double previous, double last);

  double previous_estimate() const { return previous_; }
  double last_estimate() const { return last_; }

 private:
  double previous_;
  double last_;
};

/// Integral of f(z) * exp(-rate * z) over [0, infinity).
///
/// The integrand is mapped to unit rate and truncated at z = 40/rate, where
/// the discarded tail is below |f| * e^-40 ~ 4e-18 for the bounded integrands
/// this library uses. The truncated interval is integrated with composite
/// 16-point Gauss-Legendre, doubling the panel count until two successive
/// refinements differ by less than 1e-13.
///
/// Preconditions: f continuous and bounded on [0, infinity); rate > 0.
double integrate_exp(const std::function<double(double)>& f, double rate);

}  // namespace vrjp
