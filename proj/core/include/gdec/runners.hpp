#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gdec/config.hpp"

namespace gdec {

struct VerifyCheck {
  std::string name;
  double achieved{0.0};
  double tolerance{0.0};
  bool passed{false};
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::uint64_t seed{0};
  std::string rng;

  bool all_passed() const;
  /// Plain-text report: one pass/fail line per check plus reproducibility
  /// metadata.
  std::string format() const;
};

/// Oracle-equivalence suite: F closed form vs quadrature, angular integral
/// vs the exact projector, closed-form rate vs 2D quadrature on the grid,
/// Monte-Carlo decoherence factor vs the analytic exponent. The config
/// supplies seed, grid size, realization count and the perturbation hook.
VerifyReport run_verify(const RunConfig& cfg);

/// Fig-style CSV: x, G(x), and per configured kappa the cross bracket
/// lambda^2 kappa x^3 and the total G + lambda^2 kappa x^3.
void run_figure(const RunConfig& cfg, const std::string& out_path);

/// Kernel profile sweep over the time difference.
void run_kernel(const RunConfig& cfg, const std::string& out_path);

/// Rate breakdown, single point or sweep.
void run_gamma(const RunConfig& cfg, const std::string& out_path);

/// Decoherence time for the configured parameters.
void run_tau(const RunConfig& cfg, const std::string& out_path);

/// Noise realizations dump.
void run_sample(const RunConfig& cfg, const std::string& out_path);

/// Dispatch on cfg.mode; returns a process exit status (0 ok, 1 verify
/// failure). Writes progress and the verify report to `log`.
int run_mode(const RunConfig& cfg, std::ostream& log);

}  // namespace gdec
