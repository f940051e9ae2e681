#include "maglt/spectra.hpp"

#include <cmath>

namespace maglt {

double OscillatorParams::sigma3() const {
  if (!omega3) throw std::domain_error("OscillatorParams: omega3 is not set");
  return *omega3 / B;
}

void OscillatorParams::validate(bool require_omega3) const {
  if (!(B > 0.0) || !std::isfinite(B))
    throw std::domain_error("OscillatorParams: B must be finite and > 0");
  if (!(omega1 > 0.0) || !std::isfinite(omega1))
    throw std::domain_error("OscillatorParams: omega1 must be finite and > 0");
  if (!(omega2 > 0.0) || !std::isfinite(omega2))
    throw std::domain_error("OscillatorParams: omega2 must be finite and > 0");
  if (require_omega3 && !omega3)
    throw std::domain_error("OscillatorParams: omega3 is required here");
  if (omega3 && (!(*omega3 > 0.0) || !std::isfinite(*omega3)))
    throw std::domain_error("OscillatorParams: omega3 must be finite and > 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::domain_error("OscillatorParams: gamma must be finite and >= 0");
  if (!std::isfinite(mu))
    throw std::domain_error("OscillatorParams: mu must be finite");
  if (!std::isfinite(sigma1()) || !std::isfinite(sigma2()) || !std::isfinite(reduced_mu()))
    throw std::domain_error("OscillatorParams: reduced quantities overflow");
  if (omega3 && !std::isfinite(sigma3()))
    throw std::domain_error("OscillatorParams: sigma3 overflows");
}

} // namespace maglt

namespace maglt::spectra {

namespace {

// Largest i >= 0 with c - s*(2i+1) > 0, or -1 if there is none. Closed-form
// guess, then direct fix-up so the truncation is exact: the first omitted
// term is <= 0 and every included term is > 0.
std::int64_t last_positive_index(double c, double s) {
  if (c <= s) return -1;
  const auto positive = [&](std::int64_t i) {
    return c - s * static_cast<double>(2 * i + 1) > 0.0;
  };
  auto i = static_cast<std::int64_t>(std::floor((c / s - 1.0) / 2.0));
  if (i < 0) i = 0;
  while (i >= 0 && !positive(i)) --i;
  while (positive(i + 1)) ++i;
  return i;
}

} // namespace

double pow_plus(double x, double gamma) {
  if (!(x > 0.0)) return 0.0;
  if (gamma == 0.0) return 1.0;
  if (gamma == 1.0) return x;
  if (gamma == 2.0) return x * x;
  if (gamma == 3.0) return x * x * x;
  return std::pow(x, gamma);
}

ModeFrequencies mode_frequencies(double sigma1, double sigma2) {
  if (!(sigma1 >= 0.0) || !std::isfinite(sigma1) || !(sigma2 >= 0.0) || !std::isfinite(sigma2))
    throw std::domain_error("mode_frequencies: sigma1, sigma2 must be finite and >= 0");
  const double S = 1.0 + sigma1 * sigma1 + sigma2 * sigma2;
  // The discriminant S^2 - 4 s1^2 s2^2 factors as
  // (1 + (s1-s2)^2)(1 + (s1+s2)^2), which avoids cancellation.
  const double dm = sigma1 - sigma2;
  const double dp = sigma1 + sigma2;
  const double disc = (1.0 + dm * dm) * (1.0 + dp * dp);
  const double a_plus = std::sqrt(0.5 * (S + std::sqrt(disc)));
  // Small root via the product identity a+ a- = s1 s2; the direct
  // subtraction S - sqrt(disc) cancels catastrophically for small sigma.
  const double a_minus = sigma1 * sigma2 / a_plus;
  return {a_plus, a_minus};
}

double eigenvalue_2d(const OscillatorParams& p, std::int64_t k, std::int64_t l) {
  p.validate();
  if (k < 0 || l < 0) throw std::domain_error("eigenvalue_2d: indices must be >= 0");
  const auto [ap, am] = mode_frequencies(p.sigma1(), p.sigma2());
  return p.B * (ap * static_cast<double>(2 * k + 1) + am * static_cast<double>(2 * l + 1));
}

TruncatedSum riesz_mean_2d(const OscillatorParams& p) {
  p.validate();
  const auto [ap, am] = mode_frequencies(p.sigma1(), p.sigma2());
  const double Ap = p.B * ap;
  const double Am = p.B * am;
  TruncatedSum out;
  const std::int64_t kmax = last_positive_index(p.mu - Am, Ap);
  // smallest terms first: largest indices inward, extended-precision accumulator
  long double acc = 0.0L;
  for (std::int64_t k = kmax; k >= 0; --k) {
    const double rem = p.mu - Ap * static_cast<double>(2 * k + 1);
    const std::int64_t lmax = last_positive_index(rem, Am);
    for (std::int64_t l = lmax; l >= 0; --l) {
      acc += pow_plus(rem - Am * static_cast<double>(2 * l + 1), p.gamma);
    }
    out.terms_used += lmax + 1;
    if (k == 0) out.max_index[1] = lmax;
  }
  out.max_index[0] = kmax;
  out.value = static_cast<double>(acc);
  return out;
}

TruncatedSum landau_riesz_sum(double B, double mu, double gamma) {
  if (!(B > 0.0) || !std::isfinite(B))
    throw std::domain_error("landau_riesz_sum: B must be finite and > 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::domain_error("landau_riesz_sum: gamma must be finite and >= 0");
  if (!std::isfinite(mu))
    throw std::domain_error("landau_riesz_sum: mu must be finite");
  TruncatedSum out;
  const std::int64_t mmax = last_positive_index(mu, B);
  long double acc = 0.0L;
  for (std::int64_t m = mmax; m >= 0; --m) {
    acc += pow_plus(mu - B * static_cast<double>(2 * m + 1), gamma);
  }
  out.terms_used = mmax + 1;
  out.max_index[0] = mmax;
  out.value = static_cast<double>(acc);
  return out;
}

TruncatedSum riesz_mean_3d(const OscillatorParams& p) {
  p.validate(/*require_omega3=*/true);
  const auto [ap, am] = mode_frequencies(p.sigma1(), p.sigma2());
  const double Ap = p.B * ap;
  const double Am = p.B * am;
  const double W3 = *p.omega3;
  TruncatedSum out;
  const std::int64_t kmax = last_positive_index(p.mu - Am - W3, Ap);
  long double acc = 0.0L;
  for (std::int64_t k = kmax; k >= 0; --k) {
    const double remk = p.mu - Ap * static_cast<double>(2 * k + 1);
    const std::int64_t lmax = last_positive_index(remk - W3, Am);
    for (std::int64_t l = lmax; l >= 0; --l) {
      const double reml = remk - Am * static_cast<double>(2 * l + 1);
      const std::int64_t jmax = last_positive_index(reml, W3);
      for (std::int64_t j = jmax; j >= 0; --j) {
        acc += pow_plus(reml - W3 * static_cast<double>(2 * j + 1), p.gamma);
      }
      out.terms_used += jmax + 1;
      if (k == 0 && l == 0) out.max_index[2] = jmax;
    }
    if (k == 0) out.max_index[1] = lmax;
  }
  out.max_index[0] = kmax;
  out.value = static_cast<double>(acc);
  return out;
}

TruncatedSum riesz_mean_osc1d(double omega, double Lambda, double gamma) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::domain_error("riesz_mean_osc1d: omega must be finite and > 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::domain_error("riesz_mean_osc1d: gamma must be finite and >= 0");
  if (!std::isfinite(Lambda))
    throw std::domain_error("riesz_mean_osc1d: Lambda must be finite");
  TruncatedSum out;
  const std::int64_t jmax = last_positive_index(Lambda, omega);
  long double acc = 0.0L;
  for (std::int64_t j = jmax; j >= 0; --j) {
    acc += pow_plus(Lambda - omega * static_cast<double>(2 * j + 1), gamma);
  }
  out.terms_used = jmax + 1;
  out.max_index[0] = jmax;
  out.value = static_cast<double>(acc);
  return out;
}

} // namespace maglt::spectra
