// Command-line front end: nqho [--preset NAME | --config PATH] [--mode MODE]
//                              [--output DIR] [parameter overrides]

#include <iostream>

#include "CLI11.hpp"
#include "nqho/csv_io.hpp"
#include "nqho/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Soliton solver for the nonlinear quantum harmonic oscillator"};

  std::string config_path;
  std::string preset;
  std::string mode;
  std::string output;
  bool list_presets = false;
  nqho::Overrides o;

  app.add_option("--config", config_path, "key = value run configuration file");
  app.add_option("--preset", preset, "named preset (see --list-presets)");
  app.add_option("--mode", mode, "solve | propagate | vk-scan | oracle");
  app.add_option("--output", output, "output directory");
  app.add_flag("--list-presets", list_presets, "print preset names and exit");
  app.add_option("--alpha", o.alpha, "trap strength alpha");
  app.add_option("--sigma", o.sigma, "nonlinearity sigma");
  app.add_option("--mu", o.mu, "soliton eigenvalue mu");
  app.add_option("--p-shift", o.p_shift, "iteration shift p > 0");
  app.add_option("--dt", o.dt, "time step");
  app.add_option("--t-final", o.t_final, "propagation end time");
  app.add_option("--n-points", o.n_points, "grid size (power of two)");
  app.add_option("--half-length", o.half_length, "domain half-length L");
  app.add_option("--tolerance", o.tolerance, "SRM cut-off on normalized beta change");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nqho::kExitConfigError;
  }

  if (list_presets) {
    for (const auto& name : nqho::preset_names()) std::cout << name << '\n';
    return nqho::kExitSuccess;
  }

  nqho::RunConfig config;
  try {
    if (!preset.empty() && !config_path.empty()) {
      throw nqho::ConfigError("--preset and --config are mutually exclusive");
    }
    if (!config_path.empty()) config = nqho::load_config_file(config_path);
    if (!preset.empty()) config = nqho::preset_config(preset);
    if (!mode.empty()) o.mode = nqho::parse_mode(mode);
    nqho::apply_overrides(config, o);
    if (!output.empty()) config.output_dir = output;
  } catch (const nqho::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return nqho::kExitConfigError;
  } catch (const nqho::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return nqho::kExitIoError;
  }

  return nqho::run(config, std::cerr);
}
