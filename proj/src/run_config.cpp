#include "nqho/run_config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <set>

#include "nqho/csv_io.hpp"

namespace nqho {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kSolve:
      return "solve";
    case Mode::kPropagate:
      return "propagate";
    case Mode::kVkScan:
      return "vk-scan";
    case Mode::kOracle:
      return "oracle";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::kSolve, Mode::kPropagate, Mode::kVkScan, Mode::kOracle}) {
    if (text == to_string(m)) return m;
  }
  throw ConfigError("unknown mode '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  try {
    Grid(n_points, half_length);
    srm.validate();
    Grid(propagation_n_points, propagation_half_length);
    PropagationConfig p = propagation;
    p.params = srm.params;
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (srm.initial.hump_centers.empty()) throw ConfigError("srm: at least one hump center needed");
  for (double c : srm.initial.hump_centers) {
    if (!(c > -half_length && c < half_length)) {
      throw ConfigError("srm: hump center outside (-L, L)");
    }
  }
  if (sweep) {
    static const std::set<std::string> known{"alpha", "sigma", "mu", "p_shift"};
    if (!known.contains(sweep->parameter)) {
      throw ConfigError("unknown sweep parameter '" + sweep->parameter + "'");
    }
    if (sweep->values.empty()) throw ConfigError("sweep needs at least one value");
    if (mode != Mode::kSolve) throw ConfigError("sweeps are only supported in solve mode");
  }
  if (!(scan_mu_max > scan_mu_min)) throw ConfigError("scan: mu_max must exceed mu_min");
  if (scan_samples < 3) throw ConfigError("scan: need at least 3 samples");
  if (oracle_max_mode < 0 || oracle_max_mode > kMaxHermiteOrder) {
    throw ConfigError("oracle: max_mode out of range");
  }
  if (!(oracle_t_final > 0.0)) throw ConfigError("oracle: t_final must be positive");
  if (output_dir.empty()) throw ConfigError("output directory must not be empty");
}

bool Overrides::any_numerical() const {
  return alpha || sigma || mu || p_shift || dt || t_final || n_points || half_length || tolerance;
}

void apply_overrides(RunConfig& config, const Overrides& o) {
  if (config.preset) {
    if (o.any_numerical()) {
      throw ConfigError("preset '" + *config.preset + "' fixes all numerical parameters");
    }
    if (o.mode && *o.mode != config.mode) {
      throw ConfigError("preset '" + *config.preset + "' runs in mode " +
                        std::string(to_string(config.mode)));
    }
    return;
  }
  if (o.mode) config.mode = *o.mode;
  if (o.alpha) config.srm.params.alpha = *o.alpha;
  if (o.sigma) config.srm.params.sigma = *o.sigma;
  if (o.mu) config.srm.params.mu = *o.mu;
  if (o.p_shift) config.srm.params.p_shift = *o.p_shift;
  if (o.dt) config.propagation.dt = *o.dt;
  if (o.t_final) config.propagation.t_final = *o.t_final;
  if (o.n_points) config.n_points = *o.n_points;
  if (o.half_length) config.half_length = *o.half_length;
  if (o.tolerance) config.srm.tolerance = *o.tolerance;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view cell = text.substr(start, comma - start);
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) {
      cell.remove_prefix(1);
    }
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) {
      cell.remove_suffix(1);
    }
    if (cell.empty()) {
      if (comma == text.size() && out.empty() && start == 0) break;
      throw ConfigError("empty entry in number list '" + std::string(text) + "'");
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
      throw ConfigError("malformed number '" + std::string(cell) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

namespace {

namespace pt = boost::property_tree;

double to_number(const std::string& key, const std::string& text) {
  const auto values = parse_number_list(text);
  if (values.size() != 1) throw ConfigError("key '" + key + "' expects one number");
  return values.front();
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_number(key, text);
  if (v != static_cast<double>(static_cast<int>(v))) {
    throw ConfigError("key '" + key + "' expects an integer");
  }
  return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError("key '" + key + "' expects true or false");
}

IterationForm to_form(const std::string& text) {
  if (text == "signed") return IterationForm::kSignedEigenvalue;
  if (text == "absolute") return IterationForm::kAbsoluteEigenvalue;
  throw ConfigError("srm.form must be 'signed' or 'absolute'");
}

Splitting to_splitting(const std::string& text) {
  if (text == "lie") return Splitting::kLie;
  if (text == "strang") return Splitting::kStrang;
  throw ConfigError("propagation.splitting must be 'lie' or 'strang'");
}

void apply_key(RunConfig& c, const std::string& section, const std::string& key,
               const std::string& value) {
  const std::string name = section.empty() ? key : section + "." + key;
  auto& sp = c.srm.params;
  auto& pr = c.propagation;

  if (name == "mode") c.mode = parse_mode(value);
  else if (name == "grid.n_points") c.n_points = to_int(name, value);
  else if (name == "grid.half_length") c.half_length = to_number(name, value);
  else if (name == "model.alpha") sp.alpha = to_number(name, value);
  else if (name == "model.sigma") sp.sigma = to_number(name, value);
  else if (name == "model.p_shift") sp.p_shift = to_number(name, value);
  else if (name == "model.mu") sp.mu = to_number(name, value);
  else if (name == "srm.tolerance") c.srm.tolerance = to_number(name, value);
  else if (name == "srm.max_iterations") c.srm.max_iterations = to_int(name, value);
  else if (name == "srm.centers") c.srm.initial.hump_centers = parse_number_list(value);
  else if (name == "srm.width_scale") c.srm.initial.hump_width_scale = to_number(name, value);
  else if (name == "srm.form") c.srm.form = to_form(value);
  else if (name == "srm.sweep_parameter") {
    if (!c.sweep) c.sweep.emplace();
    c.sweep->parameter = value;
  } else if (name == "srm.sweep_values") {
    if (!c.sweep) c.sweep.emplace();
    c.sweep->values = parse_number_list(value);
  }
  else if (name == "propagation.dt") pr.dt = to_number(name, value);
  else if (name == "propagation.t_final") pr.t_final = to_number(name, value);
  else if (name == "propagation.record_every") pr.record_every = to_int(name, value);
  else if (name == "propagation.normalize_input") pr.normalize_input = to_bool(name, value);
  else if (name == "propagation.window_half_width") pr.window_half_width = to_number(name, value);
  else if (name == "propagation.splitting") pr.splitting = to_splitting(value);
  else if (name == "propagation.snapshot_times") pr.snapshot_times = parse_number_list(value);
  else if (name == "propagation.n_points") c.propagation_n_points = to_int(name, value);
  else if (name == "propagation.half_length") c.propagation_half_length = to_number(name, value);
  else if (name == "scan.mu_min") c.scan_mu_min = to_number(name, value);
  else if (name == "scan.mu_max") c.scan_mu_max = to_number(name, value);
  else if (name == "scan.samples") c.scan_samples = to_int(name, value);
  else if (name == "scan.threads") c.scan_threads = static_cast<unsigned>(to_int(name, value));
  else if (name == "oracle.max_mode") c.oracle_max_mode = to_int(name, value);
  else if (name == "oracle.t_final") c.oracle_t_final = to_number(name, value);
  else throw ConfigError("unknown key '" + name + "'");
}

}  // namespace

RunConfig load_config_file(const std::filesystem::path& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    if (!std::filesystem::exists(path)) throw IoError("cannot read config " + path.string());
    throw ConfigError(std::string("config ") + path.string() + ": " + e.what());
  }

  // Flatten to (section, key, value); top-level keys have an empty section.
  struct Entry {
    std::string section, key, value;
  };
  std::vector<Entry> entries;
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      entries.push_back({"", name, node.data()});
    } else {
      for (const auto& [key, leaf] : node) entries.push_back({name, key, leaf.data()});
    }
  }

  RunConfig config;
  std::optional<std::string> output_dir;
  std::optional<std::string> preset;
  std::vector<Entry> rest;
  for (auto& e : entries) {
    if (e.section.empty() && e.key == "preset") {
      preset = e.value;
    } else if (e.section == "output" && e.key == "dir") {
      output_dir = e.value;
    } else {
      rest.push_back(std::move(e));
    }
  }

  if (preset) {
    config = preset_config(*preset);
    for (const auto& e : rest) {
      if (e.section.empty() && e.key == "mode" && parse_mode(e.value) == config.mode) continue;
      throw ConfigError("preset '" + *preset + "' fixes all numerical parameters; remove '" +
                        (e.section.empty() ? e.key : e.section + "." + e.key) + "'");
    }
  } else {
    for (const auto& e : rest) apply_key(config, e.section, e.key, e.value);
  }
  if (output_dir) config.output_dir = *output_dir;
  return config;
}

}  // namespace nqho
