#pragma once

#include <complex>
#include <functional>
#include <optional>

namespace gdec {

/// Composite-particle mass and graviton frequency cutoff, natural units.
struct GravitonParams {
  double m0{1.0};       ///< composite mass
  double lambda_g{1.0}; ///< frequency cutoff of the graviton bath

  void validate() const;
};

/// Internal (Ohmic) bath parameters, natural units.
struct InternalBathParams {
  double lambda{1.0};  ///< dimensionless internal coupling
  double gamma{1.0};   ///< Ohmic coupling, units of action
  double beta{1.0};    ///< inverse temperature
  /// Regulator cutoff for the pointwise Ohmic kernel; the high-temperature
  /// white-noise form needs none.
  std::optional<double> lambda_int{};

  void validate() const;
};

/// State moments of one bath oscillator mode, the pluggable part of the
/// anticommutator expectation. Vacuum and thermal instances are provided;
/// anything else is caller-supplied.
struct OscillatorStateMoments {
  std::function<double(double)> mean_energy;            ///< omega -> <H_omega>
  std::function<std::complex<double>(double)> pair_moment;  ///< omega -> <a^2>

  static OscillatorStateMoments vacuum();
  static OscillatorStateMoments thermal(double beta);
};

/// Dimensionless cutoff function of the vacuum kernel,
/// F(x) = x^-6 * integral_0^x y^5 cos y dy.
/// Closed form for |x| >= 0.5; alternating series below (the closed form
/// cancels catastrophically near 0). Even; F(0) = 1/6; total on finite x.
double cutoff_F(double x);

/// Series/closed-form switch point of cutoff_F, exposed for tests.
inline constexpr double kCutoffSeriesThreshold = 0.5;

/// <{q(t), q(t')}> for one oscillator mode with the given state moments:
/// (2 / m omega^2) <H> cos omega(t-t') + (2 / m omega) Re[<a^2> e^{-i omega (t+t')}].
/// Throws std::domain_error unless omega > 0, m > 0 and <H> >= omega/2.
double oscillator_anticommutator(double t, double t_prime, double omega,
                                 double m, const OscillatorStateMoments& state);

/// Scalar coefficient of the vacuum graviton noise kernel; the tensor kernel
/// is this value times the isotropic projector.
/// N(t,t') = m0^2 lambda_g^6 / (15 pi) * F[lambda_g (t - t')].
double graviton_vacuum_kernel(double t, double t_prime,
                              const GravitonParams& p);

/// Coincidence limit of the scalar coefficient: m0^2 lambda_g^6 / (90 pi).
double graviton_vacuum_coincidence(const GravitonParams& p);

/// Thermal oscillator mean energy (omega/2) coth(omega beta / 2).
double thermal_mean_energy(double omega, double beta);

/// High-temperature white-noise internal kernel, amplitude plus delta flag.
struct InternalNoiseKernel {
  double amplitude{0.0};
  bool is_delta{true};
};

/// Amplitude lambda^2 pi gamma / beta of the white-noise kernel
/// N(t,t') = A delta(t-t').
double internal_white_noise_amplitude(const InternalBathParams& p);
InternalNoiseKernel internal_white_noise(const InternalBathParams& p);

/// Pointwise Ohmic kernel with exponential regulator exp(-w/lambda_int):
/// (1/2) lambda^2 gamma * integral_0^inf w coth(w beta/2) cos(w tau) e^{-w/lambda_int} dw.
/// Even in tau. Throws std::invalid_argument when lambda_int is unset
/// (the unregulated integral diverges).
double internal_ohmic_kernel_regulated(double tau, const InternalBathParams& p,
                                       double rel_tol = 1e-9);

/// Two-time graviton noise kernel abstraction: scalar coefficient of the
/// shared isotropic tensor structure, with an exact coincidence-limit
/// contract. Only vacuum moments ship with backed numbers; other states
/// implement this interface.
class GravitonKernel {
 public:
  virtual ~GravitonKernel() = default;
  virtual double scalar(double t, double t_prime) const = 0;
  virtual double coincidence(double t) const = 0;
  /// Fastest oscillation present, used as quadrature guard.
  virtual double max_frequency() const = 0;
};

class VacuumGravitonKernel final : public GravitonKernel {
 public:
  explicit VacuumGravitonKernel(const GravitonParams& p) : params_(p) {
    params_.validate();
  }
  double scalar(double t, double t_prime) const override {
    return graviton_vacuum_kernel(t, t_prime, params_);
  }
  double coincidence(double) const override {
    return graviton_vacuum_coincidence(params_);
  }
  double max_frequency() const override { return params_.lambda_g; }
  const GravitonParams& params() const { return params_; }

 private:
  GravitonParams params_;
};

/// Wraps a kernel with a positive scale factor. Used for linearity checks
/// and the verification perturbation hook.
class ScaledGravitonKernel final : public GravitonKernel {
 public:
  ScaledGravitonKernel(const GravitonKernel& base, double factor)
      : base_(base), factor_(factor) {}
  double scalar(double t, double t_prime) const override {
    return factor_ * base_.scalar(t, t_prime);
  }
  double coincidence(double t) const override {
    return factor_ * base_.coincidence(t);
  }
  double max_frequency() const override { return base_.max_frequency(); }

 private:
  const GravitonKernel& base_;
  double factor_;
};

}  // namespace gdec
