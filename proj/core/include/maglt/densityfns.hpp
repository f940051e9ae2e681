#pragma once

#include "maglt/params.hpp"

namespace maglt::densityfns {

/// 2*pi as the single named constant shared by j, j_R and p, so the factors
/// cancel exactly in the duality identities.
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

struct DensityFnContext {
  double B = 1.0;
  void validate() const;  ///< throws std::domain_error unless B > 0 and finite
};

/// Kinetic-energy density of filled Landau levels: the piecewise affine
/// staircase j(rho) = (B^2/2pi) (L^2 + (2L+1) r) for rho = (B/2pi)(L + r),
/// integer L >= 0, r in [0,1). Continuous, increasing, convex;
/// j(rho) = B rho on the first segment and j(rho) ~ 2 pi rho^2 for rho >> B.
double j_fn(const DensityFnContext& ctx, double rho);

/// Rumin-type lower-bound density
///   j_R(rho) = B rho + 2B sum_{k>=1} (sqrt(rho) - sqrt(Bk/2pi))_+^2.
/// Differentiable and convex; equals B rho for rho <= B/2pi and
/// grows like 2 pi rho^2 / 3. Satisfies j_R(rho) >= 3 j(rho/3).
double j_rumin_fn(const DensityFnContext& ctx, double rho);

/// Pressure p(v) = -(B/2pi) sum_m ((2m+1)B + v)_-. Convex, nonincreasing,
/// <= 0, and zero for v >= -B.
double pressure_fn(const DensityFnContext& ctx, double v);

/// inf_{rho >= 0} (j(rho) + v rho), evaluated by slope matching: for
/// v < -B the infimum sits at the breakpoint rho* = (B/2pi) L* where L* is
/// the smallest L with slope B (2L+1) >= -v. Coincides with pressure_fn.
double legendre_of_j(const DensityFnContext& ctx, double v);

} // namespace maglt::densityfns
