#pragma once

#include <array>

#include "gdec/spatial_vector.hpp"

namespace gdec {

/// Symmetric 3x3 matrix stored as its six independent components.
/// Access order for 6-vector packing throughout the library:
/// (11, 22, 33, 12, 13, 23).
struct SymMat3 {
  double m11{0}, m22{0}, m33{0}, m12{0}, m13{0}, m23{0};

  double operator()(int i, int j) const {
    static constexpr int idx[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    const double* c = &m11;
    return c[idx[i][j]];
  }
  double& component(int packed) { return (&m11)[packed]; }
  double component(int packed) const { return (&m11)[packed]; }

  double trace() const { return m11 + m22 + m33; }

  /// Full contraction A_ij B_ij (off-diagonals counted twice).
  double ddot(const SymMat3& o) const {
    return m11 * o.m11 + m22 * o.m22 + m33 * o.m33 +
           2.0 * (m12 * o.m12 + m13 * o.m13 + m23 * o.m23);
  }
};

/// Packed index pairs for the (11,22,33,12,13,23) component order, 0-based.
inline constexpr int kSymPairs[6][2] = {{0, 0}, {1, 1}, {2, 2},
                                        {0, 1}, {0, 2}, {1, 2}};

/// Dense rank-4 tensor over spatial indices with the pair symmetries of a
/// polarization bilinear: T^{ijkl} = T^{jikl} = T^{ijlk} = T^{klij}.
/// Storage is the full 81 components; symmetry is a contract, not enforced
/// on writes.
class Rank4Tensor {
 public:
  Rank4Tensor() { components_.fill(0.0); }

  double& at(int i, int j, int k, int l) {
    return components_[((i * 3 + j) * 3 + k) * 3 + l];
  }
  double at(int i, int j, int k, int l) const {
    return components_[((i * 3 + j) * 3 + k) * 3 + l];
  }

  Rank4Tensor& operator+=(const Rank4Tensor& o);
  Rank4Tensor& operator*=(double s);
  friend Rank4Tensor operator-(const Rank4Tensor& a, const Rank4Tensor& b);

  double max_abs() const;
  double max_abs_diff(const Rank4Tensor& o) const;

  /// T^{ijkl} Xi_i v_j Xi_k v_l by explicit 4-index summation.
  double quadratic_form(const SpatialVector& Xi, const SpatialVector& v) const;

  /// Apply as a linear map on symmetric matrices: (T m)_ij = T_ijkl m_kl.
  SymMat3 apply(const SymMat3& m) const;

  /// The map on symmetric 3x3 matrices expressed in the orthonormal basis
  /// {E_d = e_d e_d^T, (e_a e_b^T + e_b e_a^T)/sqrt(2)}, row-major 6x6.
  /// Its eigenvalues are the eigenvalues of the tensor as a symmetric-matrix
  /// operator.
  std::array<double, 36> symmetric_map() const;

  /// Literal 6x6 reshape at representative index pairs in the
  /// (11,22,33,12,13,23) order: R[a][b] = T^{p(a) p(b)}. This is the
  /// covariance block of the packed 6-component noise vector.
  std::array<double, 36> packed_matrix() const;

 private:
  std::array<double, 81> components_;
};

/// Component of the isotropic projector
/// 3(d_ik d_jl + d_il d_jk) - 2 d_ij d_kl
/// that arises from the polarization angular integral. Indices are 1-based
/// to match the usual tensor notation; values are exact small integers.
/// Throws std::domain_error for indices outside {1,2,3}.
int projector_component(int i, int j, int k, int l);

/// The canonical projector as a dense tensor (exact integer entries).
const Rank4Tensor& isotropic_projector();

/// Quadratic contraction of the projector with a position/velocity pair:
/// P^{ijkl} Xi_i v_j Xi_k v_l. Equals 3|Xi|^2|v|^2 + (Xi.v)^2.
/// This is the geometric factor multiplying the decoherence rate.
double geometric_factor(const SpatialVector& Xi, const SpatialVector& v);

}  // namespace gdec
