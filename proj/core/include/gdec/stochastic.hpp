#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "gdec/decoherence.hpp"
#include "gdec/kernels.hpp"
#include "gdec/rank4.hpp"

namespace gdec {

/// Uniform time grid with n nodes including both endpoints.
struct TimeGrid {
  double t0{0.0};
  double t1{1.0};
  int n{2};

  void validate() const;
  double dt() const { return (t1 - t0) / (n - 1); }
  /// Node a; the last node is exactly t1 (no accumulated rounding).
  double node(int a) const { return a == n - 1 ? t1 : t0 + dt() * a; }
};

inline constexpr int kDefaultMaxGridNodes = 256;

/// Identification string recorded in output metadata: substream seeds are
/// splitmix64-mixed from (seed, realization index), each stream drives
/// mt19937_64 with a Box-Muller normal transform.
inline constexpr const char* kRngDescription =
    "mt19937_64+splitmix64-substreams+box-muller";

/// One realization of the tensor noise: a symmetric (and, through the
/// covariance structure, traceless) 3x3 sample per grid node.
struct NoiseRealization {
  std::vector<SymMat3> samples;
};

/// Discretized covariance of the packed noise vector,
/// C[(a,p),(b,q)] = scalar(t_a, t_b) * projector_packed[p][q].
/// The Kronecker structure is kept factored: sampling and quadratic forms
/// use the time and component factors, the dense matrix is assembled on
/// demand for verification.
class NoiseCovariance {
 public:
  NoiseCovariance(const TimeGrid& grid, const GravitonParams& params,
                  int max_nodes = kDefaultMaxGridNodes);

  const TimeGrid& grid() const { return grid_; }
  int dimension() const { return 6 * grid_.n; }

  /// Dense 6n x 6n covariance (node-major, component order 11,22,33,12,13,23).
  Eigen::MatrixXd full_matrix() const;

  /// Symmetric factor A with A A^T = C, as Kronecker factors.
  const Eigen::MatrixXd& time_factor() const { return time_factor_; }
  const Eigen::Matrix<double, 6, 6>& component_factor() const {
    return component_factor_;
  }

  /// w^T C w without assembling C.
  double quadratic_form(const Eigen::VectorXd& w) const;

  /// Extremes of the spectrum of C before clipping.
  double min_eigenvalue() const { return min_eig_; }
  double max_eigenvalue() const { return max_eig_; }

 private:
  TimeGrid grid_;
  Eigen::MatrixXd scalar_;                     // S_ab = kernel scalar
  Eigen::Matrix<double, 6, 6> component_;      // packed projector block
  Eigen::MatrixXd time_factor_;                // U_S sqrt(clipped spectrum)
  Eigen::Matrix<double, 6, 6> component_factor_;
  double min_eig_{0.0};
  double max_eig_{0.0};
};

/// Deterministic Gaussian samples of the noise with the built covariance.
/// Realization k uses the independent substream derived from (seed, k).
std::vector<NoiseRealization> sample_noise(const TimeGrid& grid,
                                           const GravitonParams& params,
                                           int n_realizations,
                                           std::uint64_t seed);

struct McDecoherenceResult {
  double estimate;            ///< sample mean of cos(Phi)
  double std_error;           ///< standard error of the mean
  double gamma_discretized;   ///< (1/2) w^T C w, the analytic exponent
};

/// Monte-Carlo decoherence factor <cos Phi> with
/// Phi = sum_a dt N^{ij}(t_a) * 2 Xi_i dxi_j(t_a) (rectangle weights).
/// For the Gaussian noise this converges to exp(-gamma_discretized).
/// Requires lambda = 0 (pure-graviton comparison) and a grid spanning
/// exactly [0, t_f].
McDecoherenceResult mc_decoherence_factor(const DecoherenceParams& p,
                                          const TimeGrid& grid,
                                          int n_realizations,
                                          std::uint64_t seed);

/// Rectangle-rule source weights w of the discretized exponent; exposed for
/// tests that compare the quadratic form against the continuum rate.
Eigen::VectorXd source_weights(const DecoherenceParams& p,
                               const TimeGrid& grid);

}  // namespace gdec
