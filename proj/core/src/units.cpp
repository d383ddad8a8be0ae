#include "gdec/units.hpp"

#include <cmath>
#include <stdexcept>

#include "gdec/rank4.hpp"

namespace gdec {

const PlanckScales& planck_scales() {
  static const PlanckScales s = [] {
    using namespace constants;
    PlanckScales p{};
    p.mass_kg = std::sqrt(kHbar * kSpeedOfLight / kGravitational);
    p.time_s = std::sqrt(kHbar * kGravitational /
                         std::pow(kSpeedOfLight, 5));
    p.length_m = p.time_s * kSpeedOfLight;
    p.energy_J = p.mass_kg * kSpeedOfLight * kSpeedOfLight;
    p.temperature_K = p.energy_J / kBoltzmann;
    return p;
  }();
  return s;
}

DecoherenceParams si_to_planck(const SIInputs& in) {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::domain_error(std::string("si_to_planck: ") + name +
                              " must be positive and finite");
  };
  positive(in.mass_kg, "mass_kg");
  positive(in.lambda_g_rad_per_s, "lambda_g_rad_per_s");
  positive(in.temperature_K, "temperature_K");
  positive(in.t_f_s, "t_f_s");
  if (!(in.gamma_hbar >= 0.0))
    throw std::domain_error("si_to_planck: gamma_hbar must be >= 0");
  if (in.lambda_int_rad_per_s) positive(*in.lambda_int_rad_per_s, "lambda_int_rad_per_s");

  const PlanckScales& P = planck_scales();
  DecoherenceParams p;
  p.graviton.m0 = in.mass_kg / P.mass_kg;
  p.graviton.lambda_g = in.lambda_g_rad_per_s * P.time_s;
  p.bath.lambda = in.lambda;
  p.bath.gamma = in.gamma_hbar;  // action in units of hbar is already Planck
  p.bath.beta = P.temperature_K / in.temperature_K;
  if (in.lambda_int_rad_per_s)
    p.bath.lambda_int = *in.lambda_int_rad_per_s * P.time_s;
  const double c = constants::kSpeedOfLight;
  p.config.Xi = (1.0 / P.length_m) * in.Xi_m;
  p.config.v = (1.0 / c) * in.v_m_per_s;
  p.config.V = (1.0 / c) * in.V_m_per_s;
  p.config.t_f = in.t_f_s / P.time_s;
  p.validate();
  return p;
}

SIInputs planck_to_si(const DecoherenceParams& p) {
  const PlanckScales& P = planck_scales();
  const double c = constants::kSpeedOfLight;
  SIInputs in;
  in.mass_kg = p.graviton.m0 * P.mass_kg;
  in.lambda_g_rad_per_s = p.graviton.lambda_g / P.time_s;
  in.temperature_K = P.temperature_K / p.bath.beta;
  in.gamma_hbar = p.bath.gamma;
  in.lambda = p.bath.lambda;
  if (p.bath.lambda_int)
    in.lambda_int_rad_per_s = *p.bath.lambda_int / P.time_s;
  in.Xi_m = P.length_m * p.config.Xi;
  in.v_m_per_s = c * p.config.v;
  in.V_m_per_s = c * p.config.V;
  in.t_f_s = p.config.t_f * P.time_s;
  return in;
}

double seconds_from_planck_time(double t_planck) {
  return t_planck * planck_scales().time_s;
}

double planck_time_from_seconds(double t_seconds) {
  return t_seconds / planck_scales().time_s;
}

double si_literal_cross_rate(const SIInputs& in) {
  using namespace constants;
  const double K = geometric_factor(in.Xi_m, in.v_m_per_s);
  const double gamma_si = in.gamma_hbar * kHbar;
  const double l = in.lambda_g_rad_per_s;
  const double l6 = l * l * l * l * l * l;
  const double t3 = in.t_f_s * in.t_f_s * in.t_f_s;
  return 2.0 * K / 135.0 * kGravitational * kBoltzmann /
         (std::pow(kHbar, 4) * std::pow(kSpeedOfLight, 5)) * gamma_si *
         in.temperature_K * l6 * t3;
}

}  // namespace gdec
