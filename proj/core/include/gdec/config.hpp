#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdec/decoherence.hpp"
#include "gdec/spatial_vector.hpp"

namespace gdec {

enum class RunMode { kKernel, kGamma, kFigure, kTau, kSample, kVerify };
enum class UnitSystem { kNatural, kSi };
enum class SweepScale { kLinear, kLog };

struct SweepSpec {
  std::string variable;
  double start{0.0};
  double stop{0.0};
  int count{2};
  SweepScale scale{SweepScale::kLinear};
};

/// Parse failure; names the offending key and, for file input, the line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, int line, const std::string& what)
      : std::runtime_error(format(key, line, what)), key_(key), line_(line) {}
  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& key, int line,
                            const std::string& what);
  std::string key_;
  int line_;
};

/// One run of the CLI: mode, physics parameters (natural or SI per the
/// units flag), sweep, stochastic and output settings.
struct RunConfig {
  RunMode mode{RunMode::kGamma};

  UnitSystem units{UnitSystem::kNatural};
  double m0{1.0};
  double lambda_g{1.0};
  double lambda{1.0};
  double gamma{1.0};
  double beta{1.0};             ///< natural units only
  double temperature_K{0.0};    ///< SI only; replaces beta
  std::optional<double> lambda_int{};
  SpatialVector Xi{1.0, 0.0, 0.0};
  SpatialVector v{0.0, 1.0, 0.0};
  SpatialVector V{};
  double t_f{1.0};

  std::optional<SweepSpec> sweep{};
  std::vector<double> kappa_list{1e-5, 1e-4, 1e-3};
  double x_min{0.1};
  double x_max{50.0};
  int x_count{500};

  std::uint64_t seed{1};
  int grid_n{64};
  int realizations{10000};
  double quad_rel_tol{1e-6};

  TauMode tau_mode{TauMode::kFull};
  double bracket_lo{1e-6};   ///< in units of 1 / lambda_g
  double bracket_hi{1e6};

  std::string output{};      ///< empty selects "<mode>.csv"
  bool single_thread{false};

  /// Multiplies the vacuum-kernel prefactor on the quadrature side of the
  /// verify suite. Test hook; anything but 1.0 must trip the
  /// closed-vs-quadrature check.
  double verify_perturb_prefactor{1.0};

  /// Physics parameters in natural (Planck) units, converting SI inputs
  /// when the units flag says so.
  DecoherenceParams physics() const;
};

/// Key/value override, e.g. from a --key value command-line flag.
using ConfigOverride = std::pair<std::string, std::string>;

/// Parses a flat key = value document ('#' comments, one pair per line),
/// applies overrides in order, validates every invariant. Unknown keys,
/// malformed numbers and invariant violations throw ConfigError naming the
/// key and line (line 0 for overrides).
RunConfig parse_config(const std::string& text,
                       const std::vector<ConfigOverride>& overrides = {});

RunConfig parse_config_file(const std::string& path,
                            const std::vector<ConfigOverride>& overrides = {});

/// Human-readable schema: every key, its default and its constraint.
std::string config_schema();

const char* mode_name(RunMode m);

}  // namespace gdec
