#include "maglt/semiclassics.hpp"

#include <cmath>

#include "maglt/spectra.hpp"

namespace maglt::semiclassics {

PhaseSpaceValue magnetic_semiclassic_2d(const OscillatorParams& p) {
  p.validate();
  const auto sum = spectra::landau_riesz_sum(p.B, p.mu, p.gamma + 1.0);
  const double value =
      p.B / (2.0 * (p.gamma + 1.0) * p.omega1 * p.omega2) * sum.value;
  return {value, FormulaId::magnetic_2d};
}

PhaseSpaceValue phase_space_2d(double omega1, double omega2, double mu, double gamma) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0) || !std::isfinite(omega1) || !std::isfinite(omega2))
    throw std::domain_error("phase_space_2d: omega1, omega2 must be finite and > 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::domain_error("phase_space_2d: gamma must be finite and >= 0");
  if (!std::isfinite(mu))
    throw std::domain_error("phase_space_2d: mu must be finite");
  const double value = spectra::pow_plus(mu, gamma + 2.0) * std::tgamma(gamma + 1.0) /
                       (4.0 * std::tgamma(gamma + 3.0) * omega1 * omega2);
  return {value, FormulaId::nonmagnetic_2d};
}

PhaseSpaceValue magnetic_semiclassic_3d(const OscillatorParams& p) {
  p.validate(/*require_omega3=*/true);
  const auto sum = spectra::landau_riesz_sum(p.B, p.mu, p.gamma + 2.0);
  const double value = p.B * std::tgamma(p.gamma + 1.0) /
                       (4.0 * std::tgamma(p.gamma + 3.0) * p.omega1 * p.omega2 * *p.omega3) *
                       sum.value;
  return {value, FormulaId::magnetic_3d};
}

PhaseSpaceValue semiclassic_osc1d(double omega, double Lambda, double gamma) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::domain_error("semiclassic_osc1d: omega must be finite and > 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::domain_error("semiclassic_osc1d: gamma must be finite and >= 0");
  if (!std::isfinite(Lambda))
    throw std::domain_error("semiclassic_osc1d: Lambda must be finite");
  const double value = spectra::pow_plus(Lambda, gamma + 1.0) / (2.0 * (gamma + 1.0) * omega);
  return {value, FormulaId::oscillator_1d};
}

} // namespace maglt::semiclassics
