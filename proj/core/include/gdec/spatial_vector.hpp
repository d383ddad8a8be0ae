#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gdec {

/// 3-component real vector in natural units. Used for positions, velocities
/// and propagation directions alike; the role fixes the unit.
struct SpatialVector {
  double x{0.0};
  double y{0.0};
  double z{0.0};

  constexpr double operator[](int i) const {
    return i == 0 ? x : (i == 1 ? y : z);
  }

  friend constexpr SpatialVector operator+(SpatialVector a, SpatialVector b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr SpatialVector operator-(SpatialVector a, SpatialVector b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr SpatialVector operator*(double s, SpatialVector a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend constexpr SpatialVector operator*(SpatialVector a, double s) {
    return s * a;
  }
  friend constexpr bool operator==(SpatialVector a, SpatialVector b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }

  constexpr double dot(SpatialVector o) const {
    return x * o.x + y * o.y + z * o.z;
  }
  constexpr double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }

  constexpr SpatialVector cross(SpatialVector o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }

  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }

  /// Unit vector along *this. Throws std::domain_error for the zero vector.
  SpatialVector normalized() const {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::domain_error("SpatialVector: cannot normalize zero or non-finite vector");
    return {x / n, y / n, z / n};
  }
};

inline void require_finite(const SpatialVector& v, const std::string& name) {
  if (!v.is_finite())
    throw std::domain_error(name + ": non-finite vector component");
}

inline void require_finite(double v, const std::string& name) {
  if (!std::isfinite(v))
    throw std::domain_error(name + ": non-finite value");
}

}  // namespace gdec
