#pragma once

#include "gdec/kernels.hpp"
#include "gdec/trajectory.hpp"

namespace gdec {

/// Everything the rate computations need: graviton sector, internal bath,
/// trajectory configuration.
struct DecoherenceParams {
  GravitonParams graviton{};
  InternalBathParams bath{};
  SuperpositionConfig config{};

  void validate() const {
    graviton.validate();
    bath.validate();
    config.validate();
  }
};

/// Decoherence rate split by origin. Each part is a quadratic form with a
/// positive-semidefinite kernel, hence nonnegative; total is their sum.
struct GammaBreakdown {
  double graviton{0.0};           ///< pure graviton term
  double internal_velocity{0.0};  ///< white-noise velocity term (needs V != 0)
  double cross{0.0};              ///< graviton x internal-bath term
  double total{0.0};

  static GammaBreakdown make(double grav, double vel, double crs) {
    return {grav, vel, crs, grav + vel + crs};
  }
};

/// Closed-form/quadrature switch point of G_of_x, exposed for tests.
inline constexpr double kGQuadratureThreshold = 0.1;

/// Dimensionless pure-graviton rate profile:
/// G(x) = 1 + (2/3x)[sin x - 8 sin(x/2)]
///          + (1/x^2)[(2/3) cos x - (32/3) cos(x/2) + 10].
/// The closed form cancels catastrophically as x -> 0; below the threshold
/// the value comes from the defining double integrals over the triangular
/// trajectory, scaled to isolate G. G -> 0 as x -> 0+ (like x^4/288) and
/// G -> 1 as x -> infinity. Throws std::domain_error for x <= 0.
double G_of_x(double x, double quad_rel_tol = 1e-9);

/// Dimensionless strength of the graviton x internal cross term:
/// kappa = gamma pi lambda_g / (108 m0^2 beta).
double cross_term_strength(const GravitonParams& g, const InternalBathParams& b);
double cross_term_strength(const DecoherenceParams& p);

/// Crossover solving lambda^2 kappa x^3 = G(x) on [lo, hi] by bisection.
/// Above the returned x the cross term dominates the pure graviton term.
double crossover_x(double kappa_value, double lambda = 1.0, double lo = 1.0,
                   double hi = 100.0);

/// Closed-form vacuum rate
/// Gamma(t_f) = (8 m0^2 / 5 pi) lambda_g^2 K [G(x) + lambda^2 kappa x^3],
/// x = lambda_g t_f, K the geometric factor of (Xi, v).
/// Valid for the V = 0 configuration; throws std::invalid_argument
/// otherwise (use gamma_general).
GammaBreakdown gamma_vac_closed(const DecoherenceParams& p);

/// Rate for the triangular trajectory from the defining double integrals
/// (three subdomains split at the kink) plus the coincidence-limit single
/// integrals, evaluated by adaptive quadrature against any graviton kernel.
/// The coincidence integrals use the kernel's exact coincidence contract.
/// Throws std::runtime_error with the achieved tolerance attached when the
/// quadrature fails to converge.
GammaBreakdown gamma_piecewise(const DecoherenceParams& p,
                               const GravitonKernel& kernel,
                               double rel_tol = 1e-6);

/// General rate with the white-noise internal kernel: gamma_piecewise plus
/// the internal velocity term (lambda^2 pi gamma / beta) 4 (V.v)^2 t_f.
GammaBreakdown gamma_general(const DecoherenceParams& p,
                             double rel_tol = 1e-6);

enum class TauMode {
  kFull,       ///< root of the full closed-form rate
  kCrossOnly,  ///< keep only the cross term (mass-independent regime)
};

/// Root bracket for the decoherence time, in units of 1 / lambda_g.
struct TauBracket {
  double lo{1e-6};
  double hi{1e6};
};

/// Decoherence time: the root of Gamma(tau) = 1 by bracketed bisection on
/// the closed-form rate. Throws std::runtime_error when the rate never
/// reaches 1 inside the bracket.
double tau_dec(const DecoherenceParams& p, TauMode mode = TauMode::kFull,
               TauBracket bracket = {});

/// Cube-root inversion of the cross-only rate,
/// tau = (135 beta / (2 K lambda^2 gamma lambda_g^6))^{1/3}.
/// Independent of m0.
double tau_dec_cross_only_closed(const DecoherenceParams& p);

}  // namespace gdec
