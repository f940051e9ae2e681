#pragma once

#include "maglt/params.hpp"

namespace maglt::semiclassics {

enum class FormulaId {
  magnetic_2d,     ///< Landau-level sum times the in-plane quadratic well
  nonmagnetic_2d,  ///< plain 2D phase-space integral
  magnetic_3d,     ///< Landau-level sum times the (x, p3) quadratic well
  oscillator_1d,   ///< 1D oscillator phase-space integral
};

/// Value of a semiclassical phase-space functional. Zero exactly when mu
/// (or Lambda) is at or below the bottom of the potential-plus-level shift.
struct PhaseSpaceValue {
  double value = 0.0;
  FormulaId formula_id;
};

/// (B/2pi) sum_m int_{R^2} ((2m+1)B + V(x))_-^gamma dx for the quadratic well,
/// in closed form B / (2 (gamma+1) omega1 omega2) * sum_m (mu - (2m+1)B)_+^{gamma+1}.
PhaseSpaceValue magnetic_semiclassic_2d(const OscillatorParams& p);

/// (2pi)^-2 iint (|p|^2 + omega1^2 x1^2 + omega2^2 x2^2 - mu)_-^gamma dx dp
///   = mu_+^{gamma+2} Gamma(gamma+1) / (4 Gamma(gamma+3) omega1 omega2).
PhaseSpaceValue phase_space_2d(double omega1, double omega2, double mu, double gamma);

/// (B/(2pi)^2) sum_m int_{R^3 x R} ((2m+1)B + p3^2 + V(x))_-^gamma dx dp3,
/// in closed form
///   B Gamma(gamma+1) / (4 Gamma(gamma+3) omega1 omega2 omega3)
///     * sum_m (mu - (2m+1)B)_+^{gamma+2}.
PhaseSpaceValue magnetic_semiclassic_3d(const OscillatorParams& p);

/// (1/2pi) iint (p^2 + omega^2 x^2 - Lambda)_-^gamma dx dp
///   = Lambda_+^{gamma+1} / (2 (gamma+1) omega).
PhaseSpaceValue semiclassic_osc1d(double omega, double Lambda, double gamma);

} // namespace maglt::semiclassics
