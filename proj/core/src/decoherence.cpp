#include "gdec/decoherence.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gdec/quadrature.hpp"
#include "gdec/rank4.hpp"

namespace gdec {

namespace {

double G_closed(double x) {
  return 1.0 +
         2.0 / (3.0 * x) * (std::sin(x) - 8.0 * std::sin(0.5 * x)) +
         1.0 / (x * x) *
             (2.0 / 3.0 * std::cos(x) - 32.0 / 3.0 * std::cos(0.5 * x) + 10.0);
}

// G from its defining double integrals over the triangular trajectory in
// cutoff units: G(x) = (1/3) [ J11 + J22 + 2 J12 ] with weight u F(u - u').
double G_quadrature(double x, double rel_tol) {
  const double h = 0.5 * x;
  const auto f = [x](double u, double up) {
    const double wu = (u <= 0.5 * x) ? u : (x - u);
    const double wup = (up <= 0.5 * x) ? up : (x - up);
    return wu * wup * cutoff_F(u - up);
  };
  const Rect r11{0.0, h, 0.0, h};
  const Rect r22{h, x, h, x};
  const Rect r12{0.0, h, h, x};
  const QuadratureResult q11 = integrate_2d(f, r11, rel_tol, 1.0);
  const QuadratureResult q22 = integrate_2d(f, r22, rel_tol, 1.0);
  const QuadratureResult q12 = integrate_2d(f, r12, rel_tol, 1.0);
  return (q11.value + q22.value + 2.0 * q12.value) / 3.0;
}

void require_converged(const QuadratureResult& q, const char* what) {
  if (!q.converged) {
    std::ostringstream msg;
    msg << what << ": quadrature did not converge, achieved absolute error "
        << q.abs_error_estimate << " after " << q.evaluations
        << " evaluations";
    throw std::runtime_error(msg.str());
  }
}

}  // namespace

double G_of_x(double x, double quad_rel_tol) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("G_of_x: x must be positive and finite");
  if (x < kGQuadratureThreshold) return G_quadrature(x, quad_rel_tol);
  return G_closed(x);
}

double cross_term_strength(const GravitonParams& g,
                           const InternalBathParams& b) {
  g.validate();
  b.validate();
  return b.gamma * std::numbers::pi * g.lambda_g /
         (108.0 * g.m0 * g.m0 * b.beta);
}

double cross_term_strength(const DecoherenceParams& p) {
  return cross_term_strength(p.graviton, p.bath);
}

double crossover_x(double kappa_value, double lambda, double lo, double hi) {
  const double l2k = lambda * lambda * kappa_value;
  if (!(l2k > 0.0))
    throw std::domain_error("crossover_x: lambda^2 kappa must be positive");
  const auto g = [l2k](double x) { return l2k * x * x * x - G_of_x(x); };
  return find_root_bracketed(g, lo, hi, 1e-9 * (hi - lo));
}

GammaBreakdown gamma_vac_closed(const DecoherenceParams& p) {
  p.validate();
  if (!(p.config.V == SpatialVector{}))
    throw std::invalid_argument(
        "gamma_vac_closed: requires V = 0; use gamma_general for moving "
        "averages");
  const double K = geometric_factor(p.config.Xi, p.config.v);
  const double x = p.graviton.lambda_g * p.config.t_f;
  const double prefactor = 8.0 * p.graviton.m0 * p.graviton.m0 /
                           (5.0 * std::numbers::pi) * p.graviton.lambda_g *
                           p.graviton.lambda_g * K;
  const double lam2 = p.bath.lambda * p.bath.lambda;
  const double grav = prefactor * G_of_x(x);
  const double crs = prefactor * lam2 * cross_term_strength(p) * x * x * x;
  return GammaBreakdown::make(grav, 0.0, crs);
}

GammaBreakdown gamma_piecewise(const DecoherenceParams& p,
                               const GravitonKernel& kernel, double rel_tol) {
  p.validate();
  const double t_f = p.config.t_f;
  const double h = 0.5 * t_f;
  const double K = geometric_factor(p.config.Xi, p.config.v);

  const auto shape = [t_f](double t) { return (t <= 0.5 * t_f) ? t : (t_f - t); };
  const auto f = [&](double t, double tp) {
    return shape(t) * shape(tp) * kernel.scalar(t, tp);
  };
  const double omega = kernel.max_frequency();
  const QuadratureResult q11 = integrate_2d(f, {0.0, h, 0.0, h}, rel_tol, omega);
  const QuadratureResult q22 = integrate_2d(f, {h, t_f, h, t_f}, rel_tol, omega);
  const QuadratureResult q12 = integrate_2d(f, {0.0, h, h, t_f}, rel_tol, omega);
  require_converged(q11, "gamma_piecewise first-half block");
  require_converged(q22, "gamma_piecewise second-half block");
  require_converged(q12, "gamma_piecewise mixed block");
  const double grav = 8.0 * K * (q11.value + q22.value + 2.0 * q12.value);

  // Coincidence-limit single integrals, using the kernel's exact
  // coincidence value rather than a numerical limit.
  const auto fc = [&](double t) {
    const double s = shape(t);
    return s * s * kernel.coincidence(t);
  };
  const QuadratureResult c1 = integrate_1d(fc, 0.0, h, rel_tol);
  const QuadratureResult c2 = integrate_1d(fc, h, t_f, rel_tol);
  require_converged(c1, "gamma_piecewise coincidence integral (first half)");
  require_converged(c2, "gamma_piecewise coincidence integral (second half)");
  const double lam2 = p.bath.lambda * p.bath.lambda;
  const double crs = 16.0 * lam2 * p.bath.gamma * std::numbers::pi /
                     (p.bath.beta * p.graviton.m0 * p.graviton.m0) * K *
                     (c1.value + c2.value);

  return GammaBreakdown::make(grav, 0.0, crs);
}

GammaBreakdown gamma_general(const DecoherenceParams& p, double rel_tol) {
  p.validate();
  const VacuumGravitonKernel kernel(p.graviton);
  const GammaBreakdown base = gamma_piecewise(p, kernel, rel_tol);

  // White-noise internal kernel collapses the velocity double integral:
  // (lambda^2 pi gamma / beta) (V . Delta v)^2 t_f with |Delta v| = 2|v|.
  const double vv = p.config.V.dot(p.config.v);
  const double vel =
      internal_white_noise_amplitude(p.bath) * 4.0 * vv * vv * p.config.t_f;

  return GammaBreakdown::make(base.graviton, vel, base.cross);
}

double tau_dec(const DecoherenceParams& p, TauMode mode, TauBracket bracket) {
  p.validate();
  if (!(bracket.lo > 0.0 && bracket.hi > bracket.lo))
    throw std::domain_error("tau_dec: invalid bracket");

  const auto rate = [&](double tau) {
    DecoherenceParams q = p;
    q.config.t_f = tau;
    const GammaBreakdown b = gamma_vac_closed(q);
    return (mode == TauMode::kCrossOnly) ? b.cross : b.total;
  };

  const double lo = bracket.lo / p.graviton.lambda_g;
  const double hi = bracket.hi / p.graviton.lambda_g;
  const double g_lo = rate(lo) - 1.0;
  const double g_hi = rate(hi) - 1.0;
  if (g_hi < 0.0)
    throw std::runtime_error(
        "tau_dec: rate stays below 1 within the bracket (no decoherence in "
        "range; widen the bracket)");
  if (g_lo > 0.0)
    throw std::runtime_error(
        "tau_dec: rate already exceeds 1 at the lower bracket end");

  const auto g = [&](double tau) { return rate(tau) - 1.0; };
  // Bisection down to machine resolution of the bracket.
  return find_root_bracketed(g, lo, hi, 0.0);
}

double tau_dec_cross_only_closed(const DecoherenceParams& p) {
  p.validate();
  const double K = geometric_factor(p.config.Xi, p.config.v);
  const double lam2 = p.bath.lambda * p.bath.lambda;
  const double l = p.graviton.lambda_g;
  const double l6 = l * l * l * l * l * l;
  const double denom = 2.0 * K * lam2 * p.bath.gamma * l6;
  if (!(denom > 0.0))
    throw std::domain_error(
        "tau_dec_cross_only_closed: cross term vanishes (K, lambda or gamma "
        "is zero)");
  return std::cbrt(135.0 * p.bath.beta / denom);
}

}  // namespace gdec
