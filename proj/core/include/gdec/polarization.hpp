#pragma once

#include "gdec/rank4.hpp"
#include "gdec/spatial_vector.hpp"

namespace gdec {

/// Plus/cross polarization tensors for a propagation direction khat.
/// Invariants: eps^s_ij eps_s'^ij = 2 delta^s_s', k^i eps^s_ij = 0,
/// delta^ij eps^s_ij = 0.
struct PolarizationPair {
  SymMat3 plus;
  SymMat3 cross;
  SpatialVector khat;
};

/// Builds the polarization pair from a deterministic transverse dyad:
/// take the coordinate axis least aligned with khat, project it transverse
/// and normalize, complete with the cross product.
/// Throws std::domain_error for a zero (or non-finite) direction.
PolarizationPair polarization_pair(const SpatialVector& k);

/// Sum over polarizations eps^s_ij eps^s_kl for one direction.
Rank4Tensor polarization_sum(const PolarizationPair& p);

/// Transverse projector expression of the same sum,
/// P^ik P^jl + P^il P^jk - P^ij P^kl with P_ij = delta_ij - khat_i khat_j.
Rank4Tensor polarization_sum_from_projector(const SpatialVector& khat);

struct AngularIntegralResult {
  Rank4Tensor value;
  /// False when the requested order cannot integrate degree-4 spherical
  /// polynomials exactly; the value is then only approximate.
  bool order_sufficient{true};
};

/// Integrates the polarization sum over the sphere with a product rule:
/// Gauss-Legendre in cos(theta) (`order` nodes) by uniform azimuthal
/// sampling. Exact for the degree-4 integrand once order >= 3. The result
/// equals (8 pi / 15) times the isotropic projector.
AngularIntegralResult angular_integral_numeric(int order);

}  // namespace gdec
