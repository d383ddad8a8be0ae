#include "gdec/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gdec/stochastic.hpp"
#include "gdec/units.hpp"

namespace gdec {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Entry {
  std::string key;
  std::string value;
  int line;  // 0 for command-line overrides
};

double parse_double(const Entry& e) {
  const std::string v = trim(e.value);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size())
    throw ConfigError(e.key, e.line, "malformed number '" + v + "'");
  return x;
}

int parse_int(const Entry& e) {
  const double x = parse_double(e);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x)
    throw ConfigError(e.key, e.line, "expected an integer, got '" + e.value + "'");
  return i;
}

std::uint64_t parse_u64(const Entry& e) {
  const std::string v = trim(e.value);
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size())
    throw ConfigError(e.key, e.line, "malformed unsigned integer '" + v + "'");
  return static_cast<std::uint64_t>(x);
}

bool parse_bool(const Entry& e) {
  const std::string v = trim(e.value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(e.key, e.line, "expected a boolean, got '" + v + "'");
}

std::vector<double> parse_list(const Entry& e) {
  std::vector<double> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Entry sub{e.key, item, e.line};
    out.push_back(parse_double(sub));
  }
  if (out.empty())
    throw ConfigError(e.key, e.line, "expected a comma-separated list");
  return out;
}

SpatialVector parse_vector(const Entry& e) {
  const std::vector<double> xs = parse_list(e);
  if (xs.size() != 3)
    throw ConfigError(e.key, e.line, "expected three comma-separated components");
  return {xs[0], xs[1], xs[2]};
}

}  // namespace

std::string ConfigError::format(const std::string& key, int line,
                                const std::string& what) {
  std::ostringstream msg;
  msg << "config error";
  if (line > 0) msg << " at line " << line;
  if (!key.empty()) msg << ", key '" << key << "'";
  msg << ": " << what;
  return msg.str();
}

const char* mode_name(RunMode m) {
  switch (m) {
    case RunMode::kKernel: return "kernel";
    case RunMode::kGamma: return "gamma";
    case RunMode::kFigure: return "figure";
    case RunMode::kTau: return "tau";
    case RunMode::kSample: return "sample";
    case RunMode::kVerify: return "verify";
  }
  return "?";
}

DecoherenceParams RunConfig::physics() const {
  if (units == UnitSystem::kNatural) {
    DecoherenceParams p;
    p.graviton = {m0, lambda_g};
    p.bath.lambda = lambda;
    p.bath.gamma = gamma;
    p.bath.beta = beta;
    p.bath.lambda_int = lambda_int;
    p.config = {v, Xi, V, t_f};
    p.validate();
    return p;
  }
  SIInputs in;
  in.mass_kg = m0;
  in.lambda_g_rad_per_s = lambda_g;
  in.temperature_K = temperature_K;
  in.gamma_hbar = gamma;
  in.lambda = lambda;
  in.Xi_m = Xi;
  in.v_m_per_s = v;
  in.V_m_per_s = V;
  in.t_f_s = t_f;
  in.lambda_int_rad_per_s = lambda_int;
  return si_to_planck(in);
}

namespace {

void apply_entry(RunConfig& cfg, const Entry& e, bool& mode_set,
                 bool& beta_set, bool& temperature_set, SweepSpec& sweep,
                 bool& sweep_touched) {
  const std::string& k = e.key;
  if (k == "mode") {
    const std::string v = trim(e.value);
    if (v == "kernel") cfg.mode = RunMode::kKernel;
    else if (v == "gamma") cfg.mode = RunMode::kGamma;
    else if (v == "figure") cfg.mode = RunMode::kFigure;
    else if (v == "tau") cfg.mode = RunMode::kTau;
    else if (v == "sample") cfg.mode = RunMode::kSample;
    else if (v == "verify") cfg.mode = RunMode::kVerify;
    else
      throw ConfigError(k, e.line,
                        "unknown mode '" + v +
                            "' (kernel|gamma|figure|tau|sample|verify)");
    mode_set = true;
  } else if (k == "units") {
    const std::string v = trim(e.value);
    if (v == "natural") cfg.units = UnitSystem::kNatural;
    else if (v == "si") cfg.units = UnitSystem::kSi;
    else throw ConfigError(k, e.line, "unknown unit system '" + v + "'");
  } else if (k == "m0") {
    cfg.m0 = parse_double(e);
  } else if (k == "lambda_g") {
    cfg.lambda_g = parse_double(e);
  } else if (k == "lambda") {
    cfg.lambda = parse_double(e);
  } else if (k == "gamma") {
    cfg.gamma = parse_double(e);
  } else if (k == "beta") {
    cfg.beta = parse_double(e);
    beta_set = true;
  } else if (k == "temperature_K") {
    cfg.temperature_K = parse_double(e);
    temperature_set = true;
  } else if (k == "lambda_int") {
    cfg.lambda_int = parse_double(e);
  } else if (k == "xi") {
    cfg.Xi = parse_vector(e);
  } else if (k == "v") {
    cfg.v = parse_vector(e);
  } else if (k == "V") {
    cfg.V = parse_vector(e);
  } else if (k == "t_f") {
    cfg.t_f = parse_double(e);
  } else if (k == "sweep_variable") {
    sweep.variable = trim(e.value);
    sweep_touched = true;
  } else if (k == "sweep_start") {
    sweep.start = parse_double(e);
    sweep_touched = true;
  } else if (k == "sweep_stop") {
    sweep.stop = parse_double(e);
    sweep_touched = true;
  } else if (k == "sweep_count") {
    sweep.count = parse_int(e);
    sweep_touched = true;
  } else if (k == "sweep_scale") {
    const std::string v = trim(e.value);
    if (v == "linear") sweep.scale = SweepScale::kLinear;
    else if (v == "log") sweep.scale = SweepScale::kLog;
    else throw ConfigError(k, e.line, "sweep_scale must be linear or log");
    sweep_touched = true;
  } else if (k == "kappa_list") {
    cfg.kappa_list = parse_list(e);
  } else if (k == "x_min") {
    cfg.x_min = parse_double(e);
  } else if (k == "x_max") {
    cfg.x_max = parse_double(e);
  } else if (k == "x_count") {
    cfg.x_count = parse_int(e);
  } else if (k == "seed") {
    cfg.seed = parse_u64(e);
  } else if (k == "grid_n") {
    cfg.grid_n = parse_int(e);
  } else if (k == "realizations") {
    cfg.realizations = parse_int(e);
  } else if (k == "quad_rel_tol") {
    cfg.quad_rel_tol = parse_double(e);
  } else if (k == "tau_mode") {
    const std::string v = trim(e.value);
    if (v == "full") cfg.tau_mode = TauMode::kFull;
    else if (v == "cross_only") cfg.tau_mode = TauMode::kCrossOnly;
    else throw ConfigError(k, e.line, "tau_mode must be full or cross_only");
  } else if (k == "bracket_lo") {
    cfg.bracket_lo = parse_double(e);
  } else if (k == "bracket_hi") {
    cfg.bracket_hi = parse_double(e);
  } else if (k == "output") {
    cfg.output = trim(e.value);
  } else if (k == "single_thread") {
    cfg.single_thread = parse_bool(e);
  } else if (k == "verify_perturb_prefactor") {
    cfg.verify_perturb_prefactor = parse_double(e);
  } else {
    throw ConfigError(k, e.line, "unknown key");
  }
}

void validate(RunConfig& cfg, bool mode_set, bool beta_set,
              bool temperature_set, const SweepSpec& sweep,
              bool sweep_touched) {
  const auto fail = [](const std::string& key, const std::string& what) {
    throw ConfigError(key, 0, what);
  };

  if (!mode_set) fail("mode", "required key is missing");

  if (!(cfg.m0 > 0.0)) fail("m0", "must be positive");
  if (!(cfg.lambda_g > 0.0)) fail("lambda_g", "must be positive");
  if (cfg.gamma < 0.0) fail("gamma", "must be >= 0");
  if (!(cfg.t_f > 0.0)) fail("t_f", "must be positive");
  if (cfg.lambda_int && !(*cfg.lambda_int > 0.0))
    fail("lambda_int", "must be positive when present");

  if (cfg.units == UnitSystem::kSi) {
    if (beta_set)
      fail("beta", "set temperature_K instead of beta in SI units");
    if (!temperature_set || !(cfg.temperature_K > 0.0))
      fail("temperature_K", "required and positive in SI units");
  } else {
    if (temperature_set)
      fail("temperature_K", "only valid with units = si");
    if (!(cfg.beta > 0.0)) fail("beta", "must be positive");
  }

  if (sweep_touched) {
    if (sweep.variable.empty())
      fail("sweep_variable", "required when sweep keys are present");
    static const char* kSweepable[] = {"t_f",  "lambda_g", "m0",
                                       "beta", "gamma",    "lambda", "tau"};
    if (std::find_if(std::begin(kSweepable), std::end(kSweepable),
                     [&](const char* s) { return sweep.variable == s; }) ==
        std::end(kSweepable))
      fail("sweep_variable", "unknown variable '" + sweep.variable + "'");
    if (sweep.count < 2) fail("sweep_count", "must be >= 2");
    const bool positive_definite =
        sweep.variable == "t_f" || sweep.variable == "lambda_g" ||
        sweep.variable == "m0" || sweep.variable == "beta";
    if (positive_definite && !(sweep.start > 0.0 && sweep.stop > 0.0))
      fail("sweep_start", "bounds must be positive for " + sweep.variable);
    if (sweep.scale == SweepScale::kLog &&
        !(sweep.start > 0.0 && sweep.stop > 0.0))
      fail("sweep_scale", "log scale requires positive bounds");
    if (!(sweep.stop > sweep.start))
      fail("sweep_stop", "must exceed sweep_start");
    if (cfg.mode == RunMode::kKernel && sweep.variable != "tau")
      fail("sweep_variable", "kernel mode sweeps over tau");
    if (cfg.mode != RunMode::kKernel && sweep.variable == "tau")
      fail("sweep_variable", "tau sweeps apply to kernel mode only");
    if (cfg.units == UnitSystem::kSi && sweep.variable == "beta")
      fail("sweep_variable", "beta is not an SI input; sweep in natural units");
    cfg.sweep = sweep;
  }

  for (double k : cfg.kappa_list)
    if (k < 0.0) fail("kappa_list", "kappa values must be >= 0");
  if (!(cfg.x_min > 0.0)) fail("x_min", "must be positive");
  if (!(cfg.x_max > cfg.x_min)) fail("x_max", "must exceed x_min");
  if (cfg.x_count < 2) fail("x_count", "must be >= 2");
  if (cfg.grid_n < 2) fail("grid_n", "must be >= 2");
  if (cfg.grid_n > kDefaultMaxGridNodes)
    fail("grid_n", "exceeds the maximum of 256 nodes");
  if (cfg.realizations < 2) fail("realizations", "must be >= 2");
  if (!(cfg.quad_rel_tol >= 1e-13))
    fail("quad_rel_tol", "must be >= 1e-13");
  if (!(cfg.bracket_lo > 0.0 && cfg.bracket_hi > cfg.bracket_lo))
    fail("bracket_lo", "needs 0 < bracket_lo < bracket_hi");
  if (!(cfg.verify_perturb_prefactor > 0.0))
    fail("verify_perturb_prefactor", "must be positive");
}

}  // namespace

RunConfig parse_config(const std::string& text,
                       const std::vector<ConfigOverride>& overrides) {
  std::vector<Entry> entries;
  {
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
      ++line_no;
      const size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const std::string line = trim(raw);
      if (line.empty()) continue;
      const size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError(line, line_no, "expected 'key = value'");
      entries.push_back(
          {trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no});
    }
  }
  for (const ConfigOverride& o : overrides)
    entries.push_back({o.first, o.second, 0});

  RunConfig cfg;
  bool mode_set = false, beta_set = false, temperature_set = false;
  SweepSpec sweep;
  bool sweep_touched = false;
  for (const Entry& e : entries)
    apply_entry(cfg, e, mode_set, beta_set, temperature_set, sweep,
                sweep_touched);
  validate(cfg, mode_set, beta_set, temperature_set, sweep, sweep_touched);
  return cfg;
}

RunConfig parse_config_file(const std::string& path,
                            const std::vector<ConfigOverride>& overrides) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError(path, 0, "cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), overrides);
}

std::string config_schema() {
  return
      "mode                      kernel|gamma|figure|tau|sample|verify (required)\n"
      "units                     natural|si (default natural)\n"
      "m0                        composite mass, natural units or kg (default 1)\n"
      "lambda_g                  graviton cutoff, natural units or rad/s (default 1)\n"
      "lambda                    internal coupling, dimensionless (default 1)\n"
      "gamma                     Ohmic coupling, units of action/hbar (default 1)\n"
      "beta                      inverse temperature, natural units (default 1)\n"
      "temperature_K             temperature in K; replaces beta when units = si\n"
      "lambda_int                Ohmic regulator cutoff (optional)\n"
      "xi                        average position, three comma-separated components (default 1,0,0)\n"
      "v                         branch half-velocity (default 0,1,0)\n"
      "V                         average velocity (default 0,0,0)\n"
      "t_f                       superposition duration (default 1)\n"
      "sweep_variable            t_f|lambda_g|m0|beta|gamma|lambda|tau\n"
      "sweep_start, sweep_stop   sweep bounds (positive for positive-definite variables)\n"
      "sweep_count               number of points, >= 2\n"
      "sweep_scale               linear|log (default linear)\n"
      "kappa_list                figure-mode curves (default 1e-5,1e-4,1e-3)\n"
      "x_min, x_max, x_count     figure-mode x grid (defaults 0.1, 50, 500)\n"
      "seed                      RNG seed (default 1)\n"
      "grid_n                    stochastic grid nodes, 2..256 (default 64)\n"
      "realizations              Monte-Carlo realizations (default 10000)\n"
      "quad_rel_tol              quadrature tolerance (default 1e-6)\n"
      "tau_mode                  full|cross_only (default full)\n"
      "bracket_lo, bracket_hi    tau root bracket in 1/lambda_g (defaults 1e-6, 1e6)\n"
      "output                    output file (default <mode>.csv; GDEC_OUTPUT_DIR applies)\n"
      "single_thread             true forces serial sweep execution (default false)\n"
      "verify_perturb_prefactor  verify-suite perturbation hook (default 1)\n";
}

}  // namespace gdec
