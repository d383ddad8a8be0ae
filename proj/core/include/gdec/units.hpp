#pragma once

#include <optional>

#include "gdec/decoherence.hpp"
#include "gdec/spatial_vector.hpp"

namespace gdec {

/// CODATA 2018 values, SI. c and k_B are exact; hbar and G carry 10
/// significant digits.
namespace constants {
inline constexpr double kSpeedOfLight = 299792458.0;          // m / s
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kBoltzmann = 1.380649e-23;            // J / K
inline constexpr double kGravitational = 6.674300000e-11;     // m^3 / (kg s^2)
}  // namespace constants

/// Planck scales derived from the constants above (hbar = c = k_B = G = 1).
struct PlanckScales {
  double mass_kg;
  double time_s;
  double length_m;
  double energy_J;
  double temperature_K;
};
const PlanckScales& planck_scales();

/// SI-valued inputs for the decoherence pipeline. gamma is dimensionful
/// (action); it is specified in units of hbar.
struct SIInputs {
  double mass_kg{1e-12};
  double lambda_g_rad_per_s{1.0};
  double temperature_K{1.0};
  double gamma_hbar{1.0};  ///< Ohmic coupling in units of hbar
  double lambda{1.0};
  SpatialVector Xi_m{};
  SpatialVector v_m_per_s{};
  SpatialVector V_m_per_s{};
  double t_f_s{1.0};
  std::optional<double> lambda_int_rad_per_s{};
};

/// Converts SI inputs to Planck units; all physics downstream is
/// dimensionless. Throws std::domain_error on nonpositive mass, frequency,
/// temperature or duration.
DecoherenceParams si_to_planck(const SIInputs& in);

/// Inverse conversion (exact round trip up to rounding).
SIInputs planck_to_si(const DecoherenceParams& p);

double seconds_from_planck_time(double t_planck);
double planck_time_from_seconds(double t_seconds);

/// The SI-restored cross-term rate exactly as printed,
/// Gamma = (2 K / 135) (G k_B / (hbar^4 c^5)) gamma T lambda_g^6 t_f^3,
/// with K built from Xi in meters and v in m/s. Report-only cross-check;
/// the printed formula is not dimensionless, so it never feeds the
/// Planck-unit pipeline.
double si_literal_cross_rate(const SIInputs& in);

}  // namespace gdec
