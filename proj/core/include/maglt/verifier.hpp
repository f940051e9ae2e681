#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maglt/params.hpp"

namespace maglt::verifier {

inline constexpr double kDefaultTolerance = 1e-9;   ///< relative slack
inline constexpr double kAbsoluteFloor = 1e-15;     ///< absolute slack floor

/// Outcome of checking one instance of lhs <= constant * rhs.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 1.0;  ///< the rho-constant applied
  double ratio = 0.0;     ///< lhs / (constant * rhs), with 0/0 := 0
  bool holds = false;     ///< lhs <= constant*rhs*(1+tolerance) + absolute floor
  double tolerance = kDefaultTolerance;
};

BoundReport make_report(double lhs, double rhs, double constant,
                        double tolerance = kDefaultTolerance);

/// Sharp constant for the separable quadratic cases: 1 for gamma >= 1 and
/// 2 (gamma/(gamma+1))^gamma for 0 <= gamma < 1 (with value 2 at gamma = 0).
double quadratic_sharp_constant(double gamma);

/// General-potential 3D constant table, reported for reference only:
/// 6 for gamma >= 1/2, pi sqrt(3) for gamma >= 1, 3 for gamma >= 3/2.
/// Returns the smallest applicable entry; throws for gamma < 1/2.
double general_v_constant_3d(double gamma);

/// Riesz mean of the 2D oscillator vs. rho2 times the magnetic semiclassical
/// value. Sharp with rho2 = 1 for gamma >= 1; any gamma >= 0 is accepted and
/// reported honestly.
BoundReport verify_main_2d(const OscillatorParams& p, double rho2,
                           double tolerance = kDefaultTolerance);

/// Dimensionless form: sum_{k,l} (Lambda - a+(2k+1) - a-(2l+1))_+^gamma vs.
/// (1 / (2 (gamma+1) a- a+)) sum_m (Lambda - (2m+1))_+^{gamma+1}.
/// Equivalent to verify_main_2d at B = 1.
BoundReport verify_mainequiv(double sigma1, double sigma2, double Lambda,
                             double gamma, double tolerance = kDefaultTolerance);

/// 3D oscillator Riesz mean vs. rho3 times the 3D magnetic semiclassical value.
BoundReport verify_main_3d(const OscillatorParams& p, double rho3,
                           double tolerance = kDefaultTolerance);

/// 1D oscillator Riesz mean vs. the semiclassical value, with constant 1 for
/// gamma >= 1 and the quadratic sharp constant below.
BoundReport verify_osc1d(double omega, double Lambda, double gamma,
                         double tolerance = kDefaultTolerance);

/// Finite mixture phi(t) = sum_i w_i (T_i - t)_+^{p_i} with w >= 0, T > 0 and
/// p in {1, 2}: nonnegative, convex and integrable on (0, infinity). With all
/// p_i = 2 the derivative phi' is concave.
struct ProfileTerm {
  double weight;
  double threshold;
  int power;
};

struct ConvexProfile {
  std::vector<ProfileTerm> terms;

  void validate() const;
  bool all_quadratic() const;
  double max_threshold() const;       ///< 0 for an empty profile
  double operator()(double t) const;  ///< phi(t)
  double integral() const;            ///< int_0^infty phi = sum w T^{p+1}/(p+1)
  double integral_to(double K) const; ///< int_0^K phi
};

/// h * sum_{k >= 0} phi(h (k + 1/2)); the scaled midpoint Riemann sum.
double midpoint_sum_scaled(const ConvexProfile& phi, double h);

/// Midpoint bound for convex phi: sum_k phi(k + 1/2) <= int_0^infty phi,
/// together with the partial-sum variant
/// sum_{k<K} phi(k + 1/2) <= int_0^K phi at K = ceil(max T).
BoundReport check_lemma_mean(const ConvexProfile& phi,
                             double tolerance = kDefaultTolerance);

/// For all-quadratic profiles, g(h) = h sum_k phi(h(k+1/2)) is nonincreasing
/// in h and bounded by int phi. h_grid must be positive and nonincreasing;
/// holds iff g is nonincreasing in h within 1e-12 absolute and every g(h) is
/// below the integral. Profiles with a power-1 term are rejected.
BoundReport check_lemma_mono(const ConvexProfile& phi,
                             std::span<const double> h_grid);

/// The monotonicity genuinely fails without the concave-derivative
/// assumption: for phi(t) = (1-t)_+, g(2/3) = 4/9 < 1/2 = g(1). Returns
/// lhs = g(2/3), rhs = g(1); holds means the failure is reproduced (lhs < rhs).
BoundReport lemma_mono_power1_failure();

/// A concrete gamma < 1 violation of the sharp 2D bound. The family is
/// sigma1 = sigma2 = sqrt(t), Lambda = 3; x = (3 - a+ - a-) / (2 a-).
struct CounterexampleResult {
  double gamma = 0.0;
  bool found = false;
  std::int64_t n = -1;  ///< the integer x was pinned to
  double t = 0.0;       ///< reduced squared frequency sigma^2
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// Solves x(t) = n (just above the integer) by monotone bisection on
/// t in [1e-12, 1]. Throws numeric_error if the root cannot be localized.
double solve_counterexample_t(std::int64_t n);

/// Scans n in [n_min, n_max]: at each t with x(t) = n evaluates the lattice
/// sum lhs and the closed-form rhs, returning the first n with lhs/rhs > 1.
/// Requires 0 <= gamma < 1; for gamma >= 1 the bound is a theorem and the
/// call is a domain error.
CounterexampleResult find_counterexample(double gamma, std::int64_t n_min,
                                         std::int64_t n_max);

} // namespace maglt::verifier
