#include "maglt/densityfns.hpp"

#include <cmath>
#include <limits>

#include "maglt/spectra.hpp"

namespace maglt::densityfns {

void DensityFnContext::validate() const {
  if (!(B > 0.0) || !std::isfinite(B))
    throw std::domain_error("DensityFnContext: B must be finite and > 0");
}

namespace {

struct Segment {
  double L;  // integer-valued
  double r;  // in [0, 1)
};

// rho = (B/2pi)(L + r). A half-ulp-style guard snaps near-integer values of
// 2pi rho / B to the breakpoint, so representable breakpoints get r = 0
// (either assignment is consistent: j is continuous across breakpoints).
Segment decompose(double B, double rho) {
  double x = kTwoPi * rho / B;
  const double n = std::nearbyint(x);
  if (std::abs(x - n) <=
      4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
    x = n;
  }
  const double L = std::floor(x);
  return {L, x - L};
}

void check_rho(double rho, const char* who) {
  if (!(rho >= 0.0) || !std::isfinite(rho))
    throw std::domain_error(std::string(who) + ": rho must be finite and >= 0");
}

} // namespace

double j_fn(const DensityFnContext& ctx, double rho) {
  ctx.validate();
  check_rho(rho, "j_fn");
  const auto [L, r] = decompose(ctx.B, rho);
  return ctx.B * ctx.B / kTwoPi * (L * L + (2.0 * L + 1.0) * r);
}

double j_rumin_fn(const DensityFnContext& ctx, double rho) {
  ctx.validate();
  check_rho(rho, "j_rumin_fn");
  if (rho == 0.0) return 0.0;
  const double sq = std::sqrt(rho);
  // terms vanish once B k / 2pi >= rho
  auto inside = [&](std::int64_t k) { return ctx.B * static_cast<double>(k) / kTwoPi < rho; };
  auto kmax = static_cast<std::int64_t>(std::floor(kTwoPi * rho / ctx.B));
  while (kmax >= 1 && !inside(kmax)) --kmax;
  while (inside(kmax + 1)) ++kmax;
  long double acc = 0.0L;
  for (std::int64_t k = kmax; k >= 1; --k) {
    const double d = sq - std::sqrt(ctx.B * static_cast<double>(k) / kTwoPi);
    if (d > 0.0) acc += static_cast<long double>(d) * d;
  }
  return ctx.B * (rho + 2.0 * static_cast<double>(acc));
}

double pressure_fn(const DensityFnContext& ctx, double v) {
  ctx.validate();
  if (!std::isfinite(v)) throw std::domain_error("pressure_fn: v must be finite");
  return -ctx.B / kTwoPi * spectra::landau_riesz_sum(ctx.B, -v, 1.0).value;
}

double legendre_of_j(const DensityFnContext& ctx, double v) {
  ctx.validate();
  if (!std::isfinite(v)) throw std::domain_error("legendre_of_j: v must be finite");
  if (v >= -ctx.B) return 0.0;  // j(rho) + v rho >= (B + v) rho >= 0, minimum at rho = 0
  // smallest L with slope B(2L+1) >= -v
  auto reaches = [&](double L) { return ctx.B * (2.0 * L + 1.0) >= -v; };
  double L = std::ceil((-v / ctx.B - 1.0) / 2.0);
  if (L < 1.0) L = 1.0;
  while (!reaches(L)) L += 1.0;
  while (L > 1.0 && reaches(L - 1.0)) L -= 1.0;
  // value at the breakpoint rho* = (B/2pi) L
  return ctx.B / kTwoPi * L * (ctx.B * L + v);
}

} // namespace maglt::densityfns
