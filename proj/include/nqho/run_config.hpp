#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nqho/srm.hpp"
#include "nqho/ssfm.hpp"

namespace nqho {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { kSolve, kPropagate, kVkScan, kOracle };

std::string_view to_string(Mode mode);
/// Accepts solve, propagate, vk-scan, oracle.  Throws ConfigError.
Mode parse_mode(std::string_view text);

/// Re-solves once per value with one model parameter replaced.
struct Sweep {
  /// alpha, sigma, mu or p_shift.
  std::string parameter;
  std::vector<double> values;
};

/// Everything a run needs.  A preset fills every numerical field; after that
/// only output_dir may change.
struct RunConfig {
  Mode mode = Mode::kSolve;
  std::optional<std::string> preset;

  int n_points = 1024;
  double half_length = 20.0;

  SrmConfig srm;
  std::optional<Sweep> sweep;

  /// params are taken from srm.params when the run starts.
  PropagationConfig propagation;
  int propagation_n_points = 1024;
  double propagation_half_length = 20.0;

  double scan_mu_min = 0.5;
  double scan_mu_max = 50.0;
  int scan_samples = 101;
  unsigned scan_threads = 0;

  int oracle_max_mode = 3;
  double oracle_t_final = 1.0;

  std::filesystem::path output_dir = "nqho_out";

  /// Throws ConfigError on inconsistent values.
  void validate() const;
};

/// Command-line overrides of individual parameters.
struct Overrides {
  std::optional<Mode> mode;
  std::optional<double> alpha;
  std::optional<double> sigma;
  std::optional<double> mu;
  std::optional<double> p_shift;
  std::optional<double> dt;
  std::optional<double> t_final;
  std::optional<int> n_points;
  std::optional<double> half_length;
  std::optional<double> tolerance;

  bool any_numerical() const;
};

/// Applies overrides; throws ConfigError if config carries a preset and any
/// override would change it.
void apply_overrides(RunConfig& config, const Overrides& overrides);

/// Reads the key = value file format documented in the README.  Throws
/// ConfigError on unknown keys or malformed values, IoError if unreadable.
RunConfig load_config_file(const std::filesystem::path& path);

/// Parses "1, 2.5, 3" into numbers.  Throws ConfigError.
std::vector<double> parse_number_list(std::string_view text);

std::vector<std::string> preset_names();
/// Throws ConfigError for unknown names.
RunConfig preset_config(std::string_view name);

}  // namespace nqho
