#include "gdec/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gdec/quadrature.hpp"

namespace gdec {

void GravitonParams::validate() const {
  if (!(m0 > 0.0) || !std::isfinite(m0))
    throw std::domain_error("GravitonParams: m0 must be positive and finite");
  if (!(lambda_g > 0.0) || !std::isfinite(lambda_g))
    throw std::domain_error("GravitonParams: lambda_g must be positive and finite");
}

void InternalBathParams::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::domain_error("InternalBathParams: gamma must be >= 0 and finite");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::domain_error("InternalBathParams: beta must be positive and finite");
  if (!std::isfinite(lambda))
    throw std::domain_error("InternalBathParams: lambda must be finite");
  if (lambda_int && (!(*lambda_int > 0.0) || !std::isfinite(*lambda_int)))
    throw std::domain_error("InternalBathParams: lambda_int must be positive");
}

OscillatorStateMoments OscillatorStateMoments::vacuum() {
  return {[](double omega) { return 0.5 * omega; },
          [](double) { return std::complex<double>{0.0, 0.0}; }};
}

OscillatorStateMoments OscillatorStateMoments::thermal(double beta) {
  if (!(beta > 0.0))
    throw std::domain_error("OscillatorStateMoments::thermal: beta must be positive");
  return {[beta](double omega) { return thermal_mean_energy(omega, beta); },
          [](double) { return std::complex<double>{0.0, 0.0}; }};
}

double cutoff_F(double x) {
  if (!std::isfinite(x)) throw std::domain_error("cutoff_F: non-finite argument");
  x = std::abs(x);  // the integrand y^5 cos y is odd, so F is even
  if (x < kCutoffSeriesThreshold) {
    // sum_n (-1)^n x^{2n} / ((2n)! (2n+6)); truncation < 1e-16 within the
    // switch window.
    const double x2 = x * x;
    double term = 1.0;  // x^{2n} / (2n)!
    double sum = 1.0 / 6.0;
    for (int n = 1; n <= 12; ++n) {
      term *= -x2 / ((2 * n - 1) * (2 * n));
      const double contrib = term / (2 * n + 6);
      sum += contrib;
      if (std::abs(contrib) < 1e-18) break;
    }
    return sum;
  }
  const double x2 = x * x, x4 = x2 * x2;
  const double s = std::sin(x), c = std::cos(x);
  return ((5.0 * x4 - 60.0 * x2 + 120.0) * c +
          x * (x4 - 20.0 * x2 + 120.0) * s - 120.0) /
         (x4 * x2);
}

double oscillator_anticommutator(double t, double t_prime, double omega,
                                 double m,
                                 const OscillatorStateMoments& state) {
  if (!(omega > 0.0))
    throw std::domain_error("oscillator_anticommutator: omega must be positive");
  if (!(m > 0.0))
    throw std::domain_error("oscillator_anticommutator: m must be positive");
  const double energy = state.mean_energy(omega);
  if (energy < 0.5 * omega * (1.0 - 1e-12))
    throw std::domain_error(
        "oscillator_anticommutator: mean energy below the vacuum bound omega/2");
  const std::complex<double> pair = state.pair_moment(omega);
  const std::complex<double> phase =
      std::exp(std::complex<double>{0.0, -omega * (t + t_prime)});
  return 2.0 / (m * omega * omega) * energy * std::cos(omega * (t - t_prime)) +
         2.0 / (m * omega) * std::real(pair * phase);
}

double graviton_vacuum_kernel(double t, double t_prime,
                              const GravitonParams& p) {
  p.validate();
  const double l2 = p.lambda_g * p.lambda_g;
  const double l6 = l2 * l2 * l2;
  return p.m0 * p.m0 * l6 / (15.0 * std::numbers::pi) *
         cutoff_F(p.lambda_g * (t - t_prime));
}

double graviton_vacuum_coincidence(const GravitonParams& p) {
  p.validate();
  const double l2 = p.lambda_g * p.lambda_g;
  const double l6 = l2 * l2 * l2;
  return p.m0 * p.m0 * l6 / (90.0 * std::numbers::pi);
}

double thermal_mean_energy(double omega, double beta) {
  if (!(omega > 0.0))
    throw std::domain_error("thermal_mean_energy: omega must be positive");
  if (!(beta > 0.0))
    throw std::domain_error("thermal_mean_energy: beta must be positive");
  const double z = 0.5 * omega * beta;
  if (z > 20.0) return 0.5 * omega;  // coth saturates to 1
  return 0.5 * omega / std::tanh(z);
}

double internal_white_noise_amplitude(const InternalBathParams& p) {
  p.validate();
  return p.lambda * p.lambda * std::numbers::pi * p.gamma / p.beta;
}

InternalNoiseKernel internal_white_noise(const InternalBathParams& p) {
  return {internal_white_noise_amplitude(p), true};
}

namespace {

// w coth(w beta / 2) with the finite w -> 0 limit 2/beta.
double w_coth(double w, double beta) {
  const double z = 0.5 * w * beta;
  if (z < 1e-8) return 2.0 / beta * (1.0 + z * z / 3.0);
  if (z > 20.0) return w;
  return w / std::tanh(z);
}

}  // namespace

double internal_ohmic_kernel_regulated(double tau, const InternalBathParams& p,
                                       double rel_tol) {
  p.validate();
  if (!p.lambda_int)
    throw std::invalid_argument(
        "internal_ohmic_kernel_regulated: lambda_int regulator required "
        "(unregulated frequency integral diverges)");
  const double cutoff = *p.lambda_int;
  const double upper = 45.0 * cutoff;  // exp(-45) truncation
  const double abs_tau = std::abs(tau);
  const auto integrand = [&](double w) {
    return w_coth(w, p.beta) * std::cos(w * abs_tau) * std::exp(-w / cutoff);
  };
  const QuadratureResult q =
      integrate_1d(integrand, 0.0, upper, rel_tol, abs_tau);
  return 0.5 * p.lambda * p.lambda * p.gamma * q.value;
}

}  // namespace gdec
