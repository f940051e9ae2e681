#pragma once

#include <optional>
#include <stdexcept>

namespace maglt {

/// Thrown when an iterative routine fails to reach its accuracy target
/// (e.g. bisection non-convergence). Distinct from std::domain_error so
/// callers can map tool failures and bad inputs to different exit paths.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parameters of one verification instance: field strength B, oscillator
/// frequencies omega_j, chemical potential mu and Riesz exponent gamma.
/// The potential is V(x) = omega1^2 x1^2 + omega2^2 x2^2 [+ omega3^2 x3^2] - mu.
struct OscillatorParams {
  double B = 1.0;
  double omega1 = 1.0;
  double omega2 = 1.0;
  std::optional<double> omega3{};
  double mu = 0.0;
  double gamma = 1.0;

  double sigma1() const { return omega1 / B; }
  double sigma2() const { return omega2 / B; }
  double sigma3() const;
  /// Reduced chemical potential Lambda = mu / B.
  double reduced_mu() const { return mu / B; }

  /// Throws std::domain_error unless B, omega1, omega2 > 0, gamma >= 0,
  /// mu is finite and the reduced quantities sigma_j, Lambda are finite.
  /// omega3, when present (or required), must be > 0 as well.
  void validate(bool require_omega3 = false) const;
};

} // namespace maglt
