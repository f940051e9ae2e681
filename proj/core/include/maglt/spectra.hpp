#pragma once

#include <array>
#include <cstdint>

#include "maglt/params.hpp"

namespace maglt::spectra {

/// Effective mode frequencies of the 2D oscillator in a homogeneous field,
/// in units of B. The spectrum of the operator is
///   B * (a_plus * (2k+1) + a_minus * (2l+1)),  k, l = 0, 1, 2, ...
struct ModeFrequencies {
  double a_plus;   ///< >= 1, equals 1 only at sigma1 = sigma2 = 0
  double a_minus;  ///< in [0, a_plus]; a_plus * a_minus = sigma1 * sigma2
};

/// a_pm(sigma) = sqrt((1 + s1^2 + s2^2 +- sqrt((1+s1^2+s2^2)^2 - 4 s1^2 s2^2)) / 2).
/// sigma_j = 0 is admitted for limit checks; spectrum constructors require > 0.
ModeFrequencies mode_frequencies(double sigma1, double sigma2);

/// A finite sum over lattice indices with exact truncation: every strictly
/// positive term is included and the first omitted term per axis is <= 0.
struct TruncatedSum {
  double value = 0.0;
  std::int64_t terms_used = 0;                    ///< number of nonzero terms
  std::array<std::int64_t, 3> max_index{-1, -1, -1};  ///< largest index with a nonzero term, per axis
};

/// (x)_+^gamma with the 0^0 := 0 convention: a term exactly at threshold
/// contributes 0 for gamma = 0, so gamma = 0 sums count strictly negative
/// eigenvalue shifts.
double pow_plus(double x, double gamma);

/// Eigenvalue B (a+ (2k+1) + a- (2l+1)) of the 2D oscillator in a field.
double eigenvalue_2d(const OscillatorParams& p, std::int64_t k, std::int64_t l);

/// sum_{k,l >= 0} (mu - B a+ (2k+1) - B a- (2l+1))_+^gamma.
TruncatedSum riesz_mean_2d(const OscillatorParams& p);

/// sum_{m >= 0} (mu - (2m+1) B)_+^gamma over Landau levels.
TruncatedSum landau_riesz_sum(double B, double mu, double gamma);

/// sum_{k,l,j >= 0} (mu - B a+ (2k+1) - B a- (2l+1) - omega3 (2j+1))_+^gamma.
TruncatedSum riesz_mean_3d(const OscillatorParams& p);

/// sum_{j >= 0} (Lambda - omega (2j+1))_+^gamma for the 1D oscillator.
TruncatedSum riesz_mean_osc1d(double omega, double Lambda, double gamma);

} // namespace maglt::spectra
