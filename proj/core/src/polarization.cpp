#include "gdec/polarization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gdec/quadrature.hpp"

namespace gdec {

PolarizationPair polarization_pair(const SpatialVector& k) {
  require_finite(k, "polarization_pair khat");
  if (!(k.norm2() > 0.0))
    throw std::domain_error("polarization_pair: zero propagation direction");
  const SpatialVector khat = k.normalized();

  // Coordinate axis least aligned with khat (ties prefer x, then y),
  // then Gram-Schmidt.
  const double ax = std::abs(khat.x), ay = std::abs(khat.y),
               az = std::abs(khat.z);
  SpatialVector seed{1.0, 0.0, 0.0};
  double best = ax;
  if (ay < best) {
    seed = {0.0, 1.0, 0.0};
    best = ay;
  }
  if (az < best) seed = {0.0, 0.0, 1.0};
  const SpatialVector e1 = (seed - khat.dot(seed) * khat).normalized();
  const SpatialVector e2 = khat.cross(e1);

  PolarizationPair p;
  p.khat = khat;
  for (int q = 0; q < 6; ++q) {
    const int i = kSymPairs[q][0], j = kSymPairs[q][1];
    p.plus.component(q) = e1[i] * e1[j] - e2[i] * e2[j];
    p.cross.component(q) = e1[i] * e2[j] + e2[i] * e1[j];
  }
  return p;
}

Rank4Tensor polarization_sum(const PolarizationPair& p) {
  Rank4Tensor t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t.at(i, j, k, l) = p.plus(i, j) * p.plus(k, l) +
                             p.cross(i, j) * p.cross(k, l);
  return t;
}

Rank4Tensor polarization_sum_from_projector(const SpatialVector& khat) {
  const SpatialVector n = khat.normalized();
  const auto P = [&n](int i, int j) {
    return (i == j ? 1.0 : 0.0) - n[i] * n[j];
  };
  Rank4Tensor t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t.at(i, j, k, l) =
              P(i, k) * P(j, l) + P(i, l) * P(j, k) - P(i, j) * P(k, l);
  return t;
}

AngularIntegralResult angular_integral_numeric(int order) {
  if (order < 1)
    throw std::domain_error("angular_integral_numeric: order must be >= 1");

  AngularIntegralResult res;
  // Degree-4 polynomial in khat: exact for >= 3 polar Gauss nodes and
  // >= 5 uniform azimuthal nodes.
  const int n_az = std::max(2 * order + 2, 8);
  res.order_sufficient = (order >= 3);

  const auto polar = gauss_legendre(order);
  const double dphi = 2.0 * std::numbers::pi / n_az;
  for (const GaussNode& node : polar) {
    const double u = node.x;  // cos(theta)
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int m = 0; m < n_az; ++m) {
      const double phi = dphi * m;
      const SpatialVector khat{s * std::cos(phi), s * std::sin(phi), u};
      Rank4Tensor term = polarization_sum(polarization_pair(khat));
      term *= node.w * dphi;
      res.value += term;
    }
  }
  return res;
}

}  // namespace gdec
