#pragma once

#include "gdec/spatial_vector.hpp"

namespace gdec {

/// Two-branch superposition: the branches separate at rate 2v for the first
/// half of [0, t_f] and recombine during the second half (triangular
/// separation profile). The averages Xi and V are constant; V defaults to
/// zero, which is the configuration whose closed-form rate is known.
struct SuperpositionConfig {
  SpatialVector v{};       ///< branch half-velocity
  SpatialVector Xi{};      ///< constant average position
  SpatialVector V{};       ///< constant average velocity (default zero)
  double t_f{1.0};         ///< duration of the superposition

  void validate() const {
    require_finite(v, "SuperpositionConfig v");
    require_finite(Xi, "SuperpositionConfig Xi");
    require_finite(V, "SuperpositionConfig V");
    if (!(t_f > 0.0) || !std::isfinite(t_f))
      throw std::domain_error("SuperpositionConfig: t_f must be positive and finite");
  }
};

/// Branch separation at time t: 2 v t on [0, t_f/2], 2 v (t_f - t) after.
/// Continuous; vanishes at both ends (the branches close).
/// Throws std::domain_error outside [0, t_f].
SpatialVector branch_separation(double t, const SuperpositionConfig& c);

/// Branch velocity difference: +2v on the first half, -2v on the second.
/// At the jump t = t_f/2 the left value (+2v) is returned by convention.
SpatialVector branch_velocity(double t, const SuperpositionConfig& c);

}  // namespace gdec
