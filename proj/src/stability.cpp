#include "nqho/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace nqho {

std::string_view to_string(SlopeClass c) {
  switch (c) {
    case SlopeClass::kStableCandidate:
      return "stable-candidate";
    case SlopeClass::kUnstable:
      return "unstable";
    case SlopeClass::kUnknown:
      return "unknown";
  }
  return "unknown";
}

PowerCurve build_power_curve(std::vector<double> mu_values, std::vector<double> powers,
                             std::vector<bool> converged_flags) {
  const std::size_t n = mu_values.size();
  if (powers.size() != n || converged_flags.size() != n) {
    throw std::invalid_argument("power curve: array lengths differ");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(mu_values[i] > mu_values[i - 1])) {
      throw std::invalid_argument("power curve: mu values must be strictly ascending");
    }
  }
  PowerCurve curve{std::move(mu_values), std::move(powers), std::move(converged_flags), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(curve.powers[i])) curve.converged_flags[i] = false;
  }

  const auto& mu = curve.mu_values;
  const auto& p = curve.powers;
  const auto& ok = curve.converged_flags;
  curve.slopes.assign(n, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < n; ++i) {
    if (!ok[i]) continue;
    const std::size_t lo = (i > 0 && ok[i - 1]) ? i - 1 : i;
    const std::size_t hi = (i + 1 < n && ok[i + 1]) ? i + 1 : i;
    if (lo == hi) continue;
    curve.slopes[i] = (p[hi] - p[lo]) / (mu[hi] - mu[lo]);
  }

  for (std::size_t i = 0; i < n;) {
    if (!(ok[i] && curve.slopes[i] < 0.0)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && ok[j + 1] && curve.slopes[j + 1] < 0.0) ++j;
    curve.stable_intervals.push_back({mu[i], mu[j]});
    i = j + 1;
  }
  return curve;
}

PowerCurve vk_scan(double mu_lo, double mu_hi, int n_samples, const SrmConfig& base_config,
                   const Grid& grid, unsigned threads) {
  if (!(mu_hi > mu_lo)) throw std::invalid_argument("vk_scan: mu range must be ascending");
  if (n_samples < 3) throw std::invalid_argument("vk_scan: need at least 3 samples");
  base_config.validate();

  const auto n = static_cast<std::size_t>(n_samples);
  std::vector<double> mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = mu_lo + (mu_hi - mu_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  std::vector<double> power(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<char> converged(n, 0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      SrmConfig config = base_config;
      config.params.mu = mu[i];
      const SrmResult result = srm_solve(config, grid);
      converged[i] = result.converged ? 1 : 0;
      if (result.converged) power[i] = compute_power(result.profile);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  return build_power_curve(std::move(mu), std::move(power),
                           std::vector<bool>(converged.begin(), converged.end()));
}

SlopeClass classify_slope(const PowerCurve& curve, double mu) {
  const auto& m = curve.mu_values;
  if (m.empty() || mu < m.front() || mu > m.back()) {
    throw std::out_of_range("classify_slope: mu outside the scanned range");
  }
  auto usable = [&](std::size_t i) {
    return curve.converged_flags[i] && std::isfinite(curve.slopes[i]);
  };
  auto verdict = [](double slope) {
    return slope < 0.0 ? SlopeClass::kStableCandidate : SlopeClass::kUnstable;
  };

  const auto it = std::lower_bound(m.begin(), m.end(), mu);
  const auto i = static_cast<std::size_t>(it - m.begin());
  if (*it == mu) return usable(i) ? verdict(curve.slopes[i]) : SlopeClass::kUnknown;

  const std::size_t lo = i - 1;
  const std::size_t hi = i;
  if (!usable(lo) || !usable(hi)) return SlopeClass::kUnknown;
  const double w = (mu - m[lo]) / (m[hi] - m[lo]);
  return verdict((1.0 - w) * curve.slopes[lo] + w * curve.slopes[hi]);
}

}  // namespace nqho
