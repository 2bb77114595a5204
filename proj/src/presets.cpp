#include <map>
#include <string>

#include "nqho/run_config.hpp"

namespace nqho {
namespace {

// Box half-widths are chosen per family so that alpha L^2 < 2p - mu over the
// whole preset: beyond that the spectral iteration amplifies modes sitting
// far out in the trap and diverges.
constexpr double kSingleHalfLength = 4.5;
constexpr double kDualHalfLength = 15.0;
constexpr double kTripleHalfLength = 20.0;

RunConfig single_hump() {
  RunConfig c;
  c.n_points = 1024;
  c.half_length = kSingleHalfLength;
  c.srm.params = {.alpha = 1.0, .sigma = 1.0, .p_shift = 30.0, .mu = 10.8};
  c.srm.tolerance = 1e-15;
  c.srm.initial.hump_centers = {0.0};
  return c;
}

RunConfig dual_hump() {
  RunConfig c;
  c.n_points = 1024;
  c.half_length = kDualHalfLength;
  c.srm.params = {.alpha = 1.0, .sigma = 1.0, .p_shift = 150.0, .mu = 10.8};
  c.srm.tolerance = 1e-15;
  c.srm.initial.hump_centers = {-10.0, 10.0};
  return c;
}

RunConfig triple_hump() {
  RunConfig c;
  c.n_points = 1024;
  c.half_length = kTripleHalfLength;
  c.srm.params = {.alpha = 1.0, .sigma = 1.0, .p_shift = 1000.0, .mu = 1.0};
  c.srm.tolerance = 1e-1;
  c.srm.initial.hump_centers = {-10.0, 0.0, 10.0};
  return c;
}

RunConfig with_sweep(RunConfig c, std::string parameter) {
  c.mode = Mode::kSolve;
  c.sweep = Sweep{std::move(parameter), {0.5, 1.0, 2.0}};
  return c;
}

RunConfig with_scan(RunConfig c) {
  c.mode = Mode::kVkScan;
  c.scan_mu_min = 0.5;
  c.scan_mu_max = 50.0;
  c.scan_samples = 101;
  return c;
}

RunConfig with_propagation(RunConfig c, double mu, double t_final) {
  c.mode = Mode::kPropagate;
  c.srm.params.mu = mu;
  c.propagation.dt = 5e-5;
  c.propagation.t_final = t_final;
  c.propagation.record_every = 1000;
  c.propagation.normalize_input = true;
  c.propagation.window_half_width = 5.0;
  c.propagation.splitting = Splitting::kLie;
  c.propagation.snapshot_times = {0.0, t_final};
  c.propagation_n_points = 1024;
  c.propagation_half_length = 20.0;
  return c;
}

const std::map<std::string, RunConfig (*)()>& table() {
  static const std::map<std::string, RunConfig (*)()> presets{
      {"fig1", [] { return with_sweep(single_hump(), "alpha"); }},
      {"fig2", [] { return with_sweep(single_hump(), "sigma"); }},
      {"fig3", [] { return with_scan(single_hump()); }},
      {"fig4", [] { return with_propagation(single_hump(), 10.8, 500.0); }},
      {"fig5", [] { return with_propagation(single_hump(), 10.8, 500.0); }},
      {"fig6", [] { return with_sweep(dual_hump(), "alpha"); }},
      {"fig7", [] { return with_sweep(dual_hump(), "sigma"); }},
      {"fig8", [] { return with_scan(dual_hump()); }},
      {"fig9", [] { return with_propagation(dual_hump(), 1.0, 200.0); }},
      {"fig10", [] { return with_propagation(dual_hump(), 1.0, 200.0); }},
      {"fig11", [] { return with_sweep(triple_hump(), "alpha"); }},
      {"fig12", [] { return with_sweep(triple_hump(), "sigma"); }},
      {"fig13", [] { return with_scan(triple_hump()); }},
  };
  return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : table()) names.push_back(name);
  return names;
}

RunConfig preset_config(std::string_view name) {
  const auto it = table().find(std::string(name));
  if (it == table().end()) throw ConfigError("unknown preset '" + std::string(name) + "'");
  RunConfig c = it->second();
  c.preset = std::string(name);
  return c;
}

}  // namespace nqho
