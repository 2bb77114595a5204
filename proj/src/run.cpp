#include "nqho/run.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "nqho/csv_io.hpp"
#include "nqho/fourier.hpp"
#include "nqho/stability.hpp"

namespace nqho {
namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

json describe_inputs(const RunConfig& c) {
  const auto& p = c.srm.params;
  json inputs{
      {"grid", {{"n_points", c.n_points}, {"half_length", c.half_length}}},
      {"model", {{"alpha", p.alpha}, {"sigma", p.sigma}, {"p_shift", p.p_shift}, {"mu", p.mu}}},
      {"srm",
       {{"tolerance", c.srm.tolerance},
        {"max_iterations", c.srm.max_iterations},
        {"centers", c.srm.initial.hump_centers},
        {"width_scale", c.srm.initial.hump_width_scale},
        {"form", to_string(c.srm.form)}}},
      {"propagation",
       {{"dt", c.propagation.dt},
        {"t_final", c.propagation.t_final},
        {"record_every", c.propagation.record_every},
        {"normalize_input", c.propagation.normalize_input},
        {"window_half_width", c.propagation.window_half_width},
        {"splitting", to_string(c.propagation.splitting)},
        {"snapshot_times", c.propagation.snapshot_times},
        {"n_points", c.propagation_n_points},
        {"half_length", c.propagation_half_length}}},
      {"scan",
       {{"mu_min", c.scan_mu_min},
        {"mu_max", c.scan_mu_max},
        {"samples", c.scan_samples},
        {"threads", c.scan_threads}}},
      {"oracle", {{"max_mode", c.oracle_max_mode}, {"t_final", c.oracle_t_final}}},
  };
  if (c.sweep) inputs["sweep"] = {{"parameter", c.sweep->parameter}, {"values", c.sweep->values}};
  return inputs;
}

json describe(const SrmResult& r) {
  const auto x = r.profile.grid().nodes();
  std::size_t peak = 0;
  for (std::size_t i = 0; i < r.profile.size(); ++i) {
    if (std::abs(r.profile[i]) > std::abs(r.profile[peak])) peak = i;
  }
  return {{"status", to_string(r.status)},
          {"converged", r.converged},
          {"iterations", r.iterations},
          {"beta", r.beta},
          {"final_beta_change", r.final_beta_change},
          {"residual", std::isfinite(r.residual) ? json(r.residual) : json(nullptr)},
          {"power", compute_power(r.profile)},
          {"peak_amplitude", std::abs(r.profile[peak])},
          {"peak_location", x[peak]}};
}

// Shortest round-trip text, for file names.
std::string label(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

void set_parameter(ModelParams& p, const std::string& name, double value) {
  if (name == "alpha") p.alpha = value;
  else if (name == "sigma") p.sigma = value;
  else if (name == "mu") p.mu = value;
  else if (name == "p_shift") p.p_shift = value;
  else throw ConfigError("unknown sweep parameter '" + name + "'");
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& log) : config_(config), log_(log) {}

  int execute() {
    switch (config_.mode) {
      case Mode::kSolve:
        return solve();
      case Mode::kPropagate:
        return propagate_mode();
      case Mode::kVkScan:
        return scan();
      case Mode::kOracle:
        return oracle();
    }
    return kExitConfigError;
  }

  json& results() { return results_; }
  const std::vector<std::string>& files() const { return files_; }

 private:
  std::filesystem::path file(const std::string& name) {
    files_.push_back(name);
    return config_.output_dir / name;
  }

  int solve() {
    const Grid grid(config_.n_points, config_.half_length);
    std::vector<std::pair<std::string, SrmConfig>> jobs;
    if (config_.sweep) {
      for (double v : config_.sweep->values) {
        SrmConfig c = config_.srm;
        set_parameter(c.params, config_.sweep->parameter, v);
        jobs.emplace_back(config_.sweep->parameter + "_" + label(v), c);
      }
    } else {
      jobs.emplace_back("", config_.srm);
    }

    bool all_converged = true;
    results_ = json::array();
    for (const auto& [label, srm] : jobs) {
      const SrmResult r = srm_solve(srm, grid);
      const std::string suffix = label.empty() ? "" : "_" + label;
      write_profile(r.profile, file("profile" + suffix + ".csv"));
      write_beta_history(r, file("beta_history" + suffix + ".csv"));
      json entry = describe(r);
      if (!label.empty()) entry["label"] = label;
      results_.push_back(entry);
      log_ << "solve" << suffix << ": " << to_string(r.status) << " after " << r.iterations
           << " iterations, residual " << r.residual << '\n';
      all_converged = all_converged && r.converged;
    }
    return all_converged ? kExitSuccess : kExitNonConvergence;
  }

  int propagate_mode() {
    const Grid grid(config_.n_points, config_.half_length);
    const SrmResult soliton = srm_solve(config_.srm, grid);
    write_profile(soliton.profile, file("initial_profile.csv"));
    write_beta_history(soliton, file("beta_history.csv"));
    results_["srm"] = describe(soliton);
    log_ << "srm: " << to_string(soliton.status) << ", residual " << soliton.residual << '\n';
    if (!soliton.converged) return kExitNonConvergence;

    const Grid target(config_.propagation_n_points, config_.propagation_half_length);
    const WaveField start =
        target == grid ? soliton.profile : resample(soliton.profile, target);

    PropagationConfig pc = config_.propagation;
    pc.params = config_.srm.params;
    PropagationRecord rec{.final_field = WaveField(target)};
    try {
      rec = propagate(start, pc);
    } catch (const BlowUpError& e) {
      results_["blow_up_time"] = e.time();
      log_ << e.what() << '\n';
      return kExitNonConvergence;
    }
    write_record(rec, file("record.csv"));
    for (const auto& snap : rec.profiles) {
      write_profile(snap.field, file("snapshot_t" + label(snap.time) + ".csv"));
    }

    const auto [lo, hi] = std::minmax_element(rec.peak_amplitude.begin(), rec.peak_amplitude.end());
    double mean = 0.0;
    for (double a : rec.peak_amplitude) mean += a;
    mean /= static_cast<double>(rec.peak_amplitude.size());
    const auto [wlo, whi] =
        std::minmax_element(rec.windowed_power.begin(), rec.windowed_power.end());
    results_["propagation"] = {{"steps", rec.steps},
                               {"max_relative_power_drift", rec.max_relative_power_drift},
                               {"peak_amplitude_min", *lo},
                               {"peak_amplitude_max", *hi},
                               {"peak_relative_oscillation", (*hi - *lo) / mean},
                               {"windowed_power_min", *wlo},
                               {"windowed_power_max", *whi}};
    log_ << "propagated " << rec.steps << " steps, power drift " << rec.max_relative_power_drift
         << ", peak amplitude in [" << *lo << ", " << *hi << "]\n";
    return kExitSuccess;
  }

  int scan() {
    const Grid grid(config_.n_points, config_.half_length);
    const PowerCurve curve = vk_scan(config_.scan_mu_min, config_.scan_mu_max,
                                     config_.scan_samples, config_.srm, grid, config_.scan_threads);
    write_curve(curve, file("curve.csv"));
    json intervals = json::array();
    for (const auto& iv : curve.stable_intervals) intervals.push_back({iv.lo, iv.hi});
    const auto converged = std::count(curve.converged_flags.begin(), curve.converged_flags.end(), true);
    results_ = {{"stable_intervals", intervals},
                {"converged_samples", converged},
                {"samples", curve.mu_values.size()}};
    log_ << "vk-scan: " << converged << "/" << curve.mu_values.size() << " converged, "
         << curve.stable_intervals.size() << " negative-slope interval(s)\n";
    return kExitSuccess;
  }

  int oracle() {
    const Grid grid(config_.n_points, config_.half_length);
    const std::filesystem::path path = file("oracle.csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "n,mu_n,power,residual,lie_max_error,strang_max_error\n";

    results_ = json::array();
    for (int n = 0; n <= config_.oracle_max_mode; ++n) {
      const WaveField mode = linear_mode(grid, n);
      const ModelParams linear{.alpha = 1.0, .sigma = 0.0, .p_shift = 1.0,
                               .mu = -linear_eigenvalue(n)};
      const double residual = stationary_residual(mode, linear);

      PropagationConfig pc;
      pc.dt = config_.propagation.dt;
      pc.t_final = config_.oracle_t_final;
      pc.record_every = std::numeric_limits<int>::max();
      pc.params = linear;
      for (int s = 1; s <= 10; ++s) pc.snapshot_times.push_back(0.1 * s * pc.t_final);

      double errors[2] = {0.0, 0.0};
      for (Splitting split : {Splitting::kLie, Splitting::kStrang}) {
        pc.splitting = split;
        const PropagationRecord rec = propagate(mode, pc);
        double& err = errors[split == Splitting::kLie ? 0 : 1];
        for (const auto& snap : rec.profiles) {
          err = std::max(err, max_modulus_difference(snap.field, mode));
        }
      }
      out << n << ',' << format_double(linear_eigenvalue(n)) << ','
          << format_double(compute_power(mode)) << ',' << format_double(residual) << ','
          << format_double(errors[0]) << ',' << format_double(errors[1]) << '\n';
      results_.push_back({{"n", n},
                          {"mu_n", linear_eigenvalue(n)},
                          {"power", compute_power(mode)},
                          {"residual", residual},
                          {"lie_max_error", errors[0]},
                          {"strang_max_error", errors[1]}});
      log_ << "oracle n=" << n << ": residual " << residual << ", |psi| error lie " << errors[0]
           << " strang " << errors[1] << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
    return kExitSuccess;
  }

  const RunConfig& config_;
  std::ostream& log_;
  json results_;
  std::vector<std::string> files_;
};

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    log << "cannot create " << config.output_dir << ": " << ec.message() << '\n';
    return kExitIoError;
  }

  Session session(config, log);
  int code = kExitSuccess;
  json error = nullptr;
  try {
    code = session.execute();
  } catch (const IoError& e) {
    log << "io error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    code = kExitConfigError;
    error = e.what();
  } catch (const std::invalid_argument& e) {
    log << "config error: " << e.what() << '\n';
    code = kExitConfigError;
    error = e.what();
  }

  json manifest{{"tool", "nqho"},
                {"version", kVersion},
                {"created_utc", utc_now()},
                {"mode", to_string(config.mode)},
                {"preset", config.preset ? json(*config.preset) : json(nullptr)},
                {"inputs", describe_inputs(config)},
                {"results", session.results()},
                {"files", session.files()},
                {"exit_code", code}};
  if (!error.is_null()) manifest["error"] = error;

  const auto path = config.output_dir / "manifest.json";
  std::ofstream out(path, std::ios::binary);
  out << manifest.dump(2) << '\n';
  out.flush();
  if (!out) {
    log << "io error: cannot write " << path << '\n';
    return kExitIoError;
  }
  return code;
}

}  // namespace nqho
