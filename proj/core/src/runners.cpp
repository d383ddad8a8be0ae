#include "gdec/runners.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "gdec/csv.hpp"
#include "gdec/decoherence.hpp"
#include "gdec/kernels.hpp"
#include "gdec/polarization.hpp"
#include "gdec/quadrature.hpp"
#include "gdec/stochastic.hpp"
#include "gdec/units.hpp"

namespace gdec {

namespace {

/// Static-chunked parallel loop; rows are keyed by index so the output is
/// identical to the serial order.
void for_each_index(int count, bool single_thread,
                    const std::function<void(int)>& fn) {
  if (count <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const int n_threads =
      single_thread ? 1 : static_cast<int>(std::min<unsigned>(hw, 8));
  if (n_threads <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      const int lo = static_cast<int>(static_cast<long>(count) * t / n_threads);
      const int hi =
          static_cast<int>(static_cast<long>(count) * (t + 1) / n_threads);
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<double> spaced_points(double lo, double hi, int count, bool log) {
  std::vector<double> xs(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    xs[static_cast<size_t>(i)] =
        log ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
  }
  return xs;
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  int passed = 0;
  for (const VerifyCheck& c : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "[%s] %-44s achieved %.3e  tol %.3e\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.achieved,
                  c.tolerance);
    out << line;
    if (c.passed) ++passed;
  }
  out << "seed = " << seed << "\n";
  out << "rng  = " << rng << "\n";
  out << "result: " << (all_passed() ? "PASS" : "FAIL") << " (" << passed
      << "/" << checks.size() << ")\n";
  return out.str();
}

VerifyReport run_verify(const RunConfig& cfg) {
  VerifyReport report;
  report.seed = cfg.seed;
  report.rng = kRngDescription;

  // F closed form against direct quadrature of its defining integral.
  {
    double worst = 0.0;
    const std::vector<double> xs = spaced_points(0.5, 100.0, 50, true);
    for (double x : xs) {
      const auto integrand = [](double y) { return std::pow(y, 5) * std::cos(y); };
      const QuadratureResult q = integrate_1d(integrand, 0.0, x, 1e-10, 1.0);
      const double via_quad = q.value / std::pow(x, 6);
      const double closed = cutoff_F(x);
      worst = std::max(worst, std::abs(closed - via_quad) / std::abs(closed));
    }
    report.checks.push_back(
        {"F(x) closed form vs quadrature", worst, 1e-8, worst <= 1e-8});
  }

  // Spherical quadrature of the polarization sum against the projector.
  {
    const AngularIntegralResult ai = angular_integral_numeric(6);
    Rank4Tensor expected = isotropic_projector();
    expected *= 8.0 * std::numbers::pi / 15.0;
    const double worst = ai.value.max_abs_diff(expected);
    report.checks.push_back(
        {"angular integral vs (8pi/15) projector", worst, 1e-10,
         worst <= 1e-10});
  }

  // Closed-form rate against the 2D quadrature on the acceptance grid.
  // The perturbation hook scales the kernel used on the quadrature side.
  {
    double worst = 0.0;
    const double xs[] = {1.0, 5.0, 10.0, 25.0, 50.0};
    const double kappas[] = {0.0, 1e-5, 1e-4};
    for (double x : xs) {
      for (double kap : kappas) {
        DecoherenceParams p;
        p.graviton = {1.0, 1.0};
        p.bath.lambda = 1.0;
        p.bath.beta = 1.0;
        p.bath.gamma = 108.0 * kap / std::numbers::pi;
        p.config.Xi = {1.0, 0.0, 0.0};
        p.config.v = {0.0, 1.0, 0.0};
        p.config.t_f = x;
        const VacuumGravitonKernel vacuum(p.graviton);
        const ScaledGravitonKernel kernel(vacuum,
                                          cfg.verify_perturb_prefactor);
        const GammaBreakdown quad =
            gamma_piecewise(p, kernel, std::min(cfg.quad_rel_tol, 1e-6));
        const GammaBreakdown closed = gamma_vac_closed(p);
        worst = std::max(worst, std::abs(quad.total - closed.total) /
                                    closed.total);
      }
    }
    report.checks.push_back(
        {"closed-form rate vs piecewise quadrature", worst, 1e-4,
         worst <= 1e-4});
  }

  // Monte-Carlo decoherence factor against the analytic Gaussian exponent.
  {
    DecoherenceParams p;
    p.graviton = {1.0, 1.0};
    p.bath.lambda = 0.0;
    p.config.Xi = {1.0, 0.0, 0.0};
    p.config.v = {0.0, 1.0, 0.0};
    p.config.t_f = 5.0;
    const TimeGrid grid{0.0, p.config.t_f, cfg.grid_n};
    const McDecoherenceResult mc =
        mc_decoherence_factor(p, grid, cfg.realizations, cfg.seed);
    const double target = std::exp(-mc.gamma_discretized);
    const double sigmas = std::abs(mc.estimate - target) / mc.std_error;
    report.checks.push_back(
        {"MC decoherence factor vs analytic exponent", sigmas, 3.0,
         sigmas <= 3.0});
  }

  return report;
}

void run_figure(const RunConfig& cfg, const std::string& out_path) {
  std::vector<std::string> columns{"x", "G"};
  for (double kap : cfg.kappa_list) {
    columns.push_back("cross_" + short_number(kap));
    columns.push_back("total_" + short_number(kap));
  }

  const std::vector<double> xs =
      spaced_points(cfg.x_min, cfg.x_max, cfg.x_count, true);
  const double lam2 = cfg.lambda * cfg.lambda;

  std::vector<std::vector<double>> rows(xs.size());
  for_each_index(static_cast<int>(xs.size()), cfg.single_thread, [&](int i) {
    const double x = xs[static_cast<size_t>(i)];
    std::vector<double>& row = rows[static_cast<size_t>(i)];
    row.reserve(columns.size());
    const double g = G_of_x(x);
    row.push_back(x);
    row.push_back(g);
    for (double kap : cfg.kappa_list) {
      const double cross = lam2 * kap * x * x * x;
      row.push_back(cross);
      row.push_back(g + cross);
    }
  });

  CsvWriter csv(out_path, columns);
  for (const auto& row : rows) csv.write_row(row);
  csv.close();
}

void run_kernel(const RunConfig& cfg, const std::string& out_path) {
  const DecoherenceParams p = cfg.physics();
  const bool with_ohmic = p.bath.lambda_int.has_value();

  double lo = 0.0, hi = 10.0 / p.graviton.lambda_g;
  int count = 200;
  bool log_scale = false;
  if (cfg.sweep && cfg.sweep->variable == "tau") {
    lo = cfg.sweep->start;
    hi = cfg.sweep->stop;
    count = cfg.sweep->count;
    log_scale = cfg.sweep->scale == SweepScale::kLog;
  }
  const std::vector<double> taus = spaced_points(lo, hi, count, log_scale);

  std::vector<std::string> columns{"tau", "x", "F", "graviton_scalar"};
  if (with_ohmic) columns.push_back("ohmic_regulated");

  std::vector<std::vector<double>> rows(taus.size());
  for_each_index(static_cast<int>(taus.size()), cfg.single_thread, [&](int i) {
    const double tau = taus[static_cast<size_t>(i)];
    std::vector<double>& row = rows[static_cast<size_t>(i)];
    const double x = p.graviton.lambda_g * tau;
    row = {tau, x, cutoff_F(x), graviton_vacuum_kernel(tau, 0.0, p.graviton)};
    if (with_ohmic)
      row.push_back(internal_ohmic_kernel_regulated(tau, p.bath));
  });

  CsvWriter csv(out_path, columns);
  for (const auto& row : rows) csv.write_row(row);
  csv.close();
}

namespace {

RunConfig with_swept_value(const RunConfig& cfg, const std::string& variable,
                           double value) {
  RunConfig c = cfg;
  if (variable == "t_f") c.t_f = value;
  else if (variable == "lambda_g") c.lambda_g = value;
  else if (variable == "m0") c.m0 = value;
  else if (variable == "beta") c.beta = value;
  else if (variable == "gamma") c.gamma = value;
  else if (variable == "lambda") c.lambda = value;
  else
    throw std::invalid_argument("run_gamma: cannot sweep variable '" +
                                variable + "'");
  return c;
}

}  // namespace

void run_gamma(const RunConfig& cfg, const std::string& out_path) {
  const bool closed_available = (cfg.V == SpatialVector{});

  std::string variable = "t_f";
  std::vector<double> values{cfg.t_f};
  if (cfg.sweep) {
    variable = cfg.sweep->variable;
    values = spaced_points(cfg.sweep->start, cfg.sweep->stop,
                           cfg.sweep->count,
                           cfg.sweep->scale == SweepScale::kLog);
  }

  std::vector<std::string> columns{variable, "gamma_graviton",
                                   "gamma_internal_velocity", "gamma_cross",
                                   "gamma_total"};
  if (closed_available) {
    columns.push_back("closed_graviton");
    columns.push_back("closed_cross");
    columns.push_back("closed_total");
  }

  std::vector<std::vector<double>> rows(values.size());
  for_each_index(static_cast<int>(values.size()), cfg.single_thread,
                 [&](int i) {
    const double value = values[static_cast<size_t>(i)];
    const RunConfig swept = with_swept_value(cfg, variable, value);
    const DecoherenceParams p = swept.physics();
    const GammaBreakdown b = gamma_general(p, cfg.quad_rel_tol);
    std::vector<double>& row = rows[static_cast<size_t>(i)];
    row = {value, b.graviton, b.internal_velocity, b.cross, b.total};
    if (closed_available) {
      const GammaBreakdown c = gamma_vac_closed(p);
      row.push_back(c.graviton);
      row.push_back(c.cross);
      row.push_back(c.total);
    }
  });

  CsvWriter csv(out_path, columns);
  for (const auto& row : rows) csv.write_row(row);
  csv.close();
}

void run_tau(const RunConfig& cfg, const std::string& out_path) {
  const DecoherenceParams p = cfg.physics();
  const double tau =
      tau_dec(p, cfg.tau_mode, {cfg.bracket_lo, cfg.bracket_hi});

  DecoherenceParams at_root = p;
  at_root.config.t_f = tau;
  const GammaBreakdown b = gamma_vac_closed(at_root);
  const double gamma_at_tau =
      (cfg.tau_mode == TauMode::kCrossOnly) ? b.cross : b.total;

  std::vector<std::string> columns{"tau", "gamma_at_tau"};
  std::vector<double> row{tau, gamma_at_tau};
  if (cfg.units == UnitSystem::kSi) {
    columns.push_back("tau_seconds");
    row.push_back(seconds_from_planck_time(tau));
    columns.push_back("si_literal_cross_rate");
    SIInputs si = planck_to_si(at_root);
    row.push_back(si_literal_cross_rate(si));
  }

  CsvWriter csv(out_path, columns);
  csv.write_row(row);
  csv.close();
}

void run_sample(const RunConfig& cfg, const std::string& out_path) {
  const DecoherenceParams p = cfg.physics();
  const TimeGrid grid{0.0, p.config.t_f, cfg.grid_n};
  const std::vector<NoiseRealization> reals =
      sample_noise(grid, p.graviton, cfg.realizations, cfg.seed);

  CsvWriter csv(out_path, {"realization", "node", "t", "n11", "n22", "n33",
                           "n12", "n13", "n23"});
  for (size_t k = 0; k < reals.size(); ++k) {
    for (int a = 0; a < grid.n; ++a) {
      const SymMat3& s = reals[k].samples[static_cast<size_t>(a)];
      const double row[] = {static_cast<double>(k), static_cast<double>(a),
                            grid.node(a), s.m11, s.m22, s.m33,
                            s.m12, s.m13, s.m23};
      csv.write_row(row);
    }
  }
  csv.close();
}

int run_mode(const RunConfig& cfg, std::ostream& log) {
  if (cfg.mode == RunMode::kVerify) {
    const VerifyReport report = run_verify(cfg);
    log << report.format();
    return report.all_passed() ? 0 : 1;
  }

  const std::string out_path = resolve_output_path(
      cfg.output, std::string(mode_name(cfg.mode)) + ".csv");
  switch (cfg.mode) {
    case RunMode::kFigure: run_figure(cfg, out_path); break;
    case RunMode::kKernel: run_kernel(cfg, out_path); break;
    case RunMode::kGamma: run_gamma(cfg, out_path); break;
    case RunMode::kTau: run_tau(cfg, out_path); break;
    case RunMode::kSample:
      run_sample(cfg, out_path);
      log << "rng = " << kRngDescription << ", seed = " << cfg.seed << "\n";
      break;
    case RunMode::kVerify: break;  // handled above
  }
  log << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace gdec
