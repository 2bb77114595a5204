#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "nqho/grid.hpp"
#include "nqho/model.hpp"

namespace nqho {

/// kLie applies the pointwise phase step and then the dispersive step,
///   psi <- F^-1[ exp(-i k^2 dt) F[ exp(i(-alpha x^2 + sigma|psi|^2) dt) psi ] ],
/// and is first order in dt.  kStrang wraps the dispersive step in two half
/// phase steps and is second order.
enum class Splitting { kLie, kStrang };

std::string_view to_string(Splitting splitting);

struct PropagationConfig {
  double dt = 5e-5;
  double t_final = 1.0;
  /// Steps between observable snapshots; the final state is always recorded.
  int record_every = 1;
  /// Rescale the initial field to unit power before stepping.
  bool normalize_input = false;
  ModelParams params;
  /// Half-width w of the window [-w, w] used for windowed_power.
  double window_half_width = 5.0;
  Splitting splitting = Splitting::kLie;
  /// Times at which full profiles are stored (nearest step is used).
  std::vector<double> snapshot_times;

  void validate() const;
  /// ceil(t_final / dt), ignoring round-off in the ratio.
  std::int64_t step_count() const;
};

struct Snapshot {
  double time;
  WaveField field;
};

struct PropagationRecord {
  std::vector<double> times{};
  std::vector<double> total_power{};
  std::vector<double> peak_amplitude{};
  std::vector<double> peak_location{};
  std::vector<double> windowed_power{};
  std::vector<Snapshot> profiles{};
  std::int64_t steps = 0;
  /// max_t |P(t) - P(0)| / P(0) over the recorded times.
  double max_relative_power_drift = 0.0;
  WaveField final_field;
};

/// Raised when the field stops being finite; carries the time reached.
class BlowUpError : public std::runtime_error {
 public:
  explicit BlowUpError(double time);
  double time() const { return time_; }

 private:
  double time_;
};

/// psi <- exp(i(-alpha x^2 + sigma |psi|^2) dt) psi, pointwise.
WaveField nonlinear_step(const WaveField& field, double dt, const ModelParams& params);

/// psi <- F^-1[exp(-i k^2 dt) F[psi]].
WaveField linear_step(const WaveField& field, double dt);

/// Steps `initial` to config.t_final.  Throws BlowUpError on non-finite
/// values and std::invalid_argument on bad configuration or (with
/// normalize_input) a zero initial field.
PropagationRecord propagate(const WaveField& initial, const PropagationConfig& config);

}  // namespace nqho
