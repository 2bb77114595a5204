#include "nqho/ssfm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nqho/fourier.hpp"

namespace nqho {

std::string_view to_string(Splitting splitting) {
  return splitting == Splitting::kLie ? "lie" : "strang";
}

void PropagationConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("propagation: dt must be positive");
  if (!(t_final >= dt)) throw std::invalid_argument("propagation: t_final must be >= dt");
  if (record_every < 1) throw std::invalid_argument("propagation: record_every must be >= 1");
  if (!(window_half_width > 0.0)) {
    throw std::invalid_argument("propagation: window_half_width must be positive");
  }
  params.validate();
}

std::int64_t PropagationConfig::step_count() const {
  const double ratio = t_final / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * ratio) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::ceil(ratio));
}

BlowUpError::BlowUpError(double time)
    : std::runtime_error("propagation produced non-finite values at t = " + std::to_string(time)),
      time_(time) {}

WaveField nonlinear_step(const WaveField& field, double dt, const ModelParams& params) {
  WaveField out = field;
  const auto x = field.grid().nodes();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double phase = (-params.alpha * x[i] * x[i] + params.sigma * std::norm(field[i])) * dt;
    out[i] = std::polar(1.0, phase) * field[i];
  }
  return out;
}

WaveField linear_step(const WaveField& field, double dt) {
  const auto& grid = field.grid();
  FourierTransformer transform(grid);
  WaveField out(grid);
  transform.forward(field.values(), out.values());
  const auto k = grid.wavenumbers();
  for (std::size_t m = 0; m < out.size(); ++m) out[m] *= std::polar(1.0, -k[m] * k[m] * dt);
  transform.inverse(out.values(), out.values());
  return out;
}

namespace {

// In-place stepper.  The forward and inverse node phases (-1)^m cancel across
// one dispersive step, so the raw transforms are used with a combined
// multiplier exp(-i k^2 dt) / N.
class Stepper {
 public:
  Stepper(const Grid& grid, const PropagationConfig& config)
      : transform_(grid),
        splitting_(config.splitting),
        dt_(config.dt),
        sigma_(config.params.sigma),
        potential_phase_(grid.size()),
        dispersion_(grid.size()) {
    const auto x = grid.nodes();
    const auto k = grid.wavenumbers();
    const double inv_n = 1.0 / static_cast<double>(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      potential_phase_[i] = -config.params.alpha * x[i] * x[i];
      dispersion_[i] = std::polar(inv_n, -k[i] * k[i] * dt_);
    }
  }

  // Advances psi by one step and returns sum |psi|^2 at the start of it.
  double advance(std::span<Complex> psi) {
    if (splitting_ == Splitting::kLie) {
      const double norm = phase(psi, dt_);
      disperse(psi);
      return norm;
    }
    const double norm = phase(psi, 0.5 * dt_);
    disperse(psi);
    phase(psi, 0.5 * dt_);
    return norm;
  }

 private:
  double phase(std::span<Complex> psi, double h) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double intensity = std::norm(psi[i]);
      sum += intensity;
      psi[i] *= std::polar(1.0, (potential_phase_[i] + sigma_ * intensity) * h);
    }
    return sum;
  }

  void disperse(std::span<Complex> psi) const {
    transform_.raw_forward(psi, psi);
    for (std::size_t m = 0; m < psi.size(); ++m) psi[m] *= dispersion_[m];
    transform_.raw_inverse(psi, psi);
  }

  FourierTransformer transform_;
  Splitting splitting_;
  double dt_;
  double sigma_;
  std::vector<double> potential_phase_;
  std::vector<Complex> dispersion_;
};

void record_observables(const WaveField& psi, double t, double window, PropagationRecord& rec) {
  const auto x = psi.grid().nodes();
  const double dx = psi.grid().dx();
  double total = 0.0;
  double windowed = 0.0;
  double peak = -1.0;
  double where = x[0];
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double intensity = std::norm(psi[i]);
    total += intensity;
    if (std::abs(x[i]) <= window) windowed += intensity;
    if (intensity > peak) {
      peak = intensity;
      where = x[i];
    }
  }
  rec.times.push_back(t);
  rec.total_power.push_back(total * dx);
  rec.windowed_power.push_back(windowed * dx);
  rec.peak_amplitude.push_back(std::sqrt(peak));
  rec.peak_location.push_back(where);
}

}  // namespace

PropagationRecord propagate(const WaveField& initial, const PropagationConfig& config) {
  config.validate();
  if (!initial.all_finite()) throw std::invalid_argument("propagate: initial field not finite");

  WaveField psi = initial;
  if (config.normalize_input) {
    const double power = compute_power(psi);
    if (!(power > 0.0)) throw std::invalid_argument("propagate: cannot normalize a zero field");
    psi *= 1.0 / std::sqrt(power);
  }

  const std::int64_t steps = config.step_count();
  std::vector<std::int64_t> snapshot_steps;
  for (double t : config.snapshot_times) {
    const auto s = static_cast<std::int64_t>(std::llround(t / config.dt));
    snapshot_steps.push_back(std::clamp<std::int64_t>(s, 0, steps));
  }

  PropagationRecord rec{.final_field = WaveField(initial.grid())};
  rec.steps = steps;
  auto observe = [&](std::int64_t s) {
    const double t = static_cast<double>(s) * config.dt;
    if (s == 0 || s % config.record_every == 0 || s == steps) {
      record_observables(psi, t, config.window_half_width, rec);
    }
    for (std::size_t i = 0; i < snapshot_steps.size(); ++i) {
      if (snapshot_steps[i] == s) rec.profiles.push_back({config.snapshot_times[i], psi});
    }
  };

  Stepper stepper(psi.grid(), config);
  observe(0);
  for (std::int64_t s = 0; s < steps; ++s) {
    const double norm = stepper.advance(psi.values());
    if (!std::isfinite(norm)) throw BlowUpError(static_cast<double>(s) * config.dt);
    observe(s + 1);
  }
  if (!psi.all_finite()) throw BlowUpError(static_cast<double>(steps) * config.dt);

  const double p0 = rec.total_power.front();
  if (p0 > 0.0) {
    for (double p : rec.total_power) {
      rec.max_relative_power_drift = std::max(rec.max_relative_power_drift, std::abs(p - p0) / p0);
    }
  }
  rec.final_field = std::move(psi);
  return rec;
}

}  // namespace nqho
