#include "gdec/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "gdec/trajectory.hpp"

namespace gdec {

void TimeGrid::validate() const {
  if (!(t1 > t0) || !std::isfinite(t0) || !std::isfinite(t1))
    throw std::domain_error("TimeGrid: requires finite t1 > t0");
  if (n < 2) throw std::domain_error("TimeGrid: requires n >= 2 nodes");
}

namespace {

std::uint64_t splitmix_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix_mix(seed + (k + 1) * 0x9E3779B97F4A7C15ull);
}

/// Standard normals from one substream: mt19937_64 uniforms through the
/// Box-Muller transform (pair-cached).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_open();   // (0,1], log-safe
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  double uniform_open() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }
  std::mt19937_64 engine_;
  bool have_cached_{false};
  double cached_{0.0};
};

struct KahanSum {
  double sum{0.0};
  double comp{0.0};
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

constexpr double kPsdRelTol = 1e-8;

}  // namespace

NoiseCovariance::NoiseCovariance(const TimeGrid& grid,
                                 const GravitonParams& params, int max_nodes)
    : grid_(grid) {
  grid_.validate();
  params.validate();
  if (grid_.n > max_nodes) {
    std::ostringstream msg;
    msg << "NoiseCovariance: grid has " << grid_.n
        << " nodes, exceeding the configured maximum " << max_nodes;
    throw std::domain_error(msg.str());
  }

  const int n = grid_.n;
  scalar_.resize(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) {
      const double v =
          graviton_vacuum_kernel(grid_.node(a), grid_.node(b), params);
      scalar_(a, b) = v;
      scalar_(b, a) = v;
    }

  const std::array<double, 36> packed = isotropic_projector().packed_matrix();
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) component_(p, q) = packed[p * 6 + q];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_time(scalar_);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es_comp(
      component_);
  if (es_time.info() != Eigen::Success || es_comp.info() != Eigen::Success)
    throw std::runtime_error("NoiseCovariance: eigendecomposition failed");

  const Eigen::VectorXd lt = es_time.eigenvalues();
  const Eigen::Matrix<double, 6, 1> lc = es_comp.eigenvalues();
  const double lt_max = lt.maxCoeff();
  const double lc_max = lc.maxCoeff();
  max_eig_ = lt_max * lc_max;
  // Spectrum of the Kronecker product is the set of products.
  min_eig_ = std::min(lt.minCoeff() * lc_max, lt_max * lc.minCoeff());

  if (min_eig_ < -kPsdRelTol * max_eig_) {
    std::ostringstream msg;
    msg << "NoiseCovariance: covariance indefinite beyond tolerance, most "
        << "negative eigenvalue " << min_eig_ << " vs maximum " << max_eig_;
    throw std::runtime_error(msg.str());
  }

  Eigen::VectorXd lt_clipped = lt.cwiseMax(0.0).cwiseSqrt();
  Eigen::Matrix<double, 6, 1> lc_clipped = lc.cwiseMax(0.0).cwiseSqrt();
  time_factor_ = es_time.eigenvectors() * lt_clipped.asDiagonal();
  component_factor_ = es_comp.eigenvectors() * lc_clipped.asDiagonal();
}

Eigen::MatrixXd NoiseCovariance::full_matrix() const {
  const int n = grid_.n;
  Eigen::MatrixXd c(6 * n, 6 * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      c.block<6, 6>(6 * a, 6 * b) = scalar_(a, b) * component_;
  return c;
}

double NoiseCovariance::quadratic_form(const Eigen::VectorXd& w) const {
  const int n = grid_.n;
  if (w.size() != 6 * n)
    throw std::invalid_argument("NoiseCovariance::quadratic_form: size mismatch");
  Eigen::MatrixXd W(n, 6);
  for (int a = 0; a < n; ++a)
    for (int p = 0; p < 6; ++p) W(a, p) = w(6 * a + p);
  const Eigen::MatrixXd Z = scalar_ * W;           // sum over nodes
  return (W.cwiseProduct(Z * component_)).sum();   // then components
}

std::vector<NoiseRealization> sample_noise(const TimeGrid& grid,
                                           const GravitonParams& params,
                                           int n_realizations,
                                           std::uint64_t seed) {
  if (n_realizations < 1)
    throw std::domain_error("sample_noise: need at least one realization");
  const NoiseCovariance cov(grid, params);
  const int n = grid.n;

  std::vector<NoiseRealization> out(static_cast<size_t>(n_realizations));
  Eigen::MatrixXd Z(n, 6);
  for (int k = 0; k < n_realizations; ++k) {
    GaussianStream gauss(substream_seed(seed, static_cast<std::uint64_t>(k)));
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < 6; ++p) Z(a, p) = gauss.next();
    const Eigen::MatrixXd X =
        cov.time_factor() * Z * cov.component_factor().transpose();
    NoiseRealization& real = out[static_cast<size_t>(k)];
    real.samples.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < 6; ++p)
        real.samples[static_cast<size_t>(a)].component(p) = X(a, p);
  }
  return out;
}

Eigen::VectorXd source_weights(const DecoherenceParams& p,
                               const TimeGrid& grid) {
  p.validate();
  grid.validate();
  const double dt = grid.dt();
  Eigen::VectorXd w(6 * grid.n);
  for (int a = 0; a < grid.n; ++a) {
    const SpatialVector dxi = branch_separation(grid.node(a), p.config);
    const SpatialVector& Xi = p.config.Xi;
    // Symmetric source s_ij = Xi_i dxi_j + dxi_i Xi_j; off-diagonal packed
    // components carry the full-sum multiplicity 2.
    for (int q = 0; q < 6; ++q) {
      const int i = kSymPairs[q][0], j = kSymPairs[q][1];
      const double s = Xi[i] * dxi[j] + dxi[i] * Xi[j];
      const double mult = (q < 3) ? 1.0 : 2.0;
      w(6 * a + q) = dt * mult * s;
    }
  }
  return w;
}

McDecoherenceResult mc_decoherence_factor(const DecoherenceParams& p,
                                          const TimeGrid& grid,
                                          int n_realizations,
                                          std::uint64_t seed) {
  p.validate();
  grid.validate();
  if (p.bath.lambda != 0.0)
    throw std::invalid_argument(
        "mc_decoherence_factor: pure-graviton comparison requires lambda = 0");
  if (grid.t0 != 0.0 || grid.t1 != p.config.t_f)
    throw std::invalid_argument(
        "mc_decoherence_factor: grid must span exactly [0, t_f]");
  if (n_realizations < 2)
    throw std::domain_error("mc_decoherence_factor: need >= 2 realizations");

  const NoiseCovariance cov(grid, p.graviton);
  const Eigen::VectorXd w = source_weights(p, grid);
  const double gamma_disc = 0.5 * cov.quadratic_form(w);

  // Phi = w . x with x = (A_t kron A_c) z collapses to an elementwise
  // product against U = A_t^T W A_c, so realizations never materialize.
  const int n = grid.n;
  Eigen::MatrixXd W(n, 6);
  for (int a = 0; a < n; ++a)
    for (int q = 0; q < 6; ++q) W(a, q) = w(6 * a + q);
  const Eigen::MatrixXd U =
      cov.time_factor().transpose() * W * cov.component_factor();

  KahanSum sum, sum_sq;
  for (int k = 0; k < n_realizations; ++k) {
    GaussianStream gauss(substream_seed(seed, static_cast<std::uint64_t>(k)));
    double phi = 0.0;
    for (int a = 0; a < n; ++a)
      for (int q = 0; q < 6; ++q) phi += U(a, q) * gauss.next();
    const double c = std::cos(phi);
    sum.add(c);
    sum_sq.add(c * c);
  }

  const double nreal = static_cast<double>(n_realizations);
  const double mean = sum.sum / nreal;
  const double var =
      std::max(0.0, (sum_sq.sum - nreal * mean * mean) / (nreal - 1.0));
  if (!std::isfinite(var) || !std::isfinite(mean))
    throw std::runtime_error("mc_decoherence_factor: non-finite statistics");
  return {mean, std::sqrt(var / nreal), gamma_disc};
}

}  // namespace gdec
