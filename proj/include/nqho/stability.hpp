#pragma once

#include <string_view>
#include <vector>

#include "nqho/grid.hpp"
#include "nqho/srm.hpp"

namespace nqho {

struct MuInterval {
  double lo;
  double hi;
};

/// Sampled P(mu) with slope bookkeeping for the Vakhitov-Kolokolov test.
///
/// slopes has the same length as mu_values: central differences across the
/// immediate neighbours when both are converged, one-sided where only one is
/// converged, NaN for non-converged samples or isolated ones.
/// stable_intervals are the maximal runs of consecutive converged samples
/// whose slope is negative, reported as (first mu, last mu) of the run.
struct PowerCurve {
  std::vector<double> mu_values;
  std::vector<double> powers;
  std::vector<bool> converged_flags;
  std::vector<double> slopes;
  std::vector<MuInterval> stable_intervals;
};

/// Builds slopes and intervals from raw samples.  mu_values must be strictly
/// ascending; throws std::invalid_argument otherwise.
PowerCurve build_power_curve(std::vector<double> mu_values, std::vector<double> powers,
                             std::vector<bool> converged_flags);

/// Runs srm_solve at n_samples evenly spaced eigenvalues in [mu_lo, mu_hi]
/// (all other settings from base_config) and records P = compute_power.
/// Samples are solved on up to `threads` worker threads (0 = hardware
/// concurrency); the result does not depend on the thread count.
PowerCurve vk_scan(double mu_lo, double mu_hi, int n_samples, const SrmConfig& base_config,
                   const Grid& grid, unsigned threads = 0);

/// dP/dmu < 0 is necessary, not sufficient, for stability, hence "candidate".
enum class SlopeClass { kStableCandidate, kUnstable, kUnknown };

std::string_view to_string(SlopeClass c);

/// Classifies mu by linearly interpolating the slopes of the two bracketing
/// samples.  kUnknown if either bracketing sample is not converged or has no
/// slope.  Throws std::out_of_range when mu lies outside the sampled range.
SlopeClass classify_slope(const PowerCurve& curve, double mu);

}  // namespace nqho
