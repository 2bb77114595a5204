#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "nqho/stability.hpp"

using namespace nqho;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

PowerCurve curve_of(const std::vector<double>& mu, double (*f)(double)) {
  std::vector<double> p;
  for (double m : mu) p.push_back(f(m));
  return build_power_curve(mu, p, std::vector<bool>(mu.size(), true));
}

}  // namespace

TEST_CASE("monotone curves") {
  const auto mu = linspace(1.0, 10.0, 10);
  const PowerCurve up = curve_of(mu, [](double m) { return 2.0 * m; });
  CHECK(up.stable_intervals.empty());
  for (double s : up.slopes) CHECK(s == doctest::Approx(2.0));
  CHECK(classify_slope(up, 5.5) == SlopeClass::kUnstable);

  const PowerCurve down = curve_of(mu, [](double m) { return 100.0 - m * m; });
  REQUIRE(down.stable_intervals.size() == 1);
  CHECK(down.stable_intervals[0].lo == 1.0);
  CHECK(down.stable_intervals[0].hi == 10.0);
  CHECK(classify_slope(down, 3.3) == SlopeClass::kStableCandidate);
}

TEST_CASE("parabola changes sign at its vertex") {
  const auto mu = linspace(0.5, 50.0, 100);
  const PowerCurve c = curve_of(mu, [](double m) { return (m - 25.0) * (m - 25.0); });
  REQUIRE(c.stable_intervals.size() == 1);
  CHECK(c.stable_intervals[0].lo == 0.5);
  CHECK(std::abs(c.stable_intervals[0].hi - 25.0) <= 0.5);
  CHECK(classify_slope(c, 10.0) == SlopeClass::kStableCandidate);
  CHECK(classify_slope(c, 40.0) == SlopeClass::kUnstable);
}

TEST_CASE("non-converged samples") {
  const auto mu = linspace(0.0, 6.0, 7);
  std::vector<double> p{6, 5, 4, 3, 2, 1, 0};
  std::vector<bool> ok{true, true, true, false, true, true, true};
  const PowerCurve c = build_power_curve(mu, p, ok);
  CHECK(std::isnan(c.slopes[3]));
  CHECK(c.slopes[2] == doctest::Approx(-1.0));
  REQUIRE(c.stable_intervals.size() == 2);
  CHECK(c.stable_intervals[0].hi == 2.0);
  CHECK(c.stable_intervals[1].lo == 4.0);
  CHECK(classify_slope(c, 2.5) == SlopeClass::kUnknown);
  CHECK(classify_slope(c, 0.5) == SlopeClass::kStableCandidate);

  std::vector<bool> isolated{true, false, true, false, true, true, true};
  CHECK(std::isnan(build_power_curve(mu, p, isolated).slopes[2]));

  p[5] = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(build_power_curve(mu, p, ok).converged_flags[5]);
}

TEST_CASE("invalid curves and queries") {
  CHECK_THROWS_AS(build_power_curve({1.0, 1.0, 2.0}, {1, 2, 3}, {true, true, true}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_power_curve({1.0, 2.0}, {1, 2, 3}, {true, true}), std::invalid_argument);
  const PowerCurve c = curve_of(linspace(1.0, 2.0, 3), [](double m) { return m; });
  CHECK_THROWS_AS(classify_slope(c, 0.5), std::out_of_range);
  CHECK_THROWS_AS(classify_slope(c, 2.5), std::out_of_range);
}

TEST_CASE("intervals are stable under refinement") {
  auto f = [](double m) { return std::sin(m); };
  const PowerCurve coarse = curve_of(linspace(0.0, 10.0, 21), f);
  const PowerCurve fine = curve_of(linspace(0.0, 10.0, 41), f);
  REQUIRE(coarse.stable_intervals.size() == fine.stable_intervals.size());
  for (std::size_t i = 0; i < coarse.stable_intervals.size(); ++i) {
    CHECK(std::abs(coarse.stable_intervals[i].lo - fine.stable_intervals[i].lo) <= 1.0);
    CHECK(std::abs(coarse.stable_intervals[i].hi - fine.stable_intervals[i].hi) <= 1.0);
  }
}

TEST_CASE("scan over the single-hump branch") {
  SrmConfig base;
  base.params = {.alpha = 1.0, .sigma = 1.0, .p_shift = 30.0, .mu = 0.0};
  base.tolerance = 1e-12;
  const Grid g = make_grid(256, 4.5);
  const PowerCurve serial = vk_scan(5.0, 15.0, 5, base, g, 1);
  const PowerCurve parallel = vk_scan(5.0, 15.0, 5, base, g, 3);
  CHECK(serial.mu_values == parallel.mu_values);
  CHECK(serial.powers == parallel.powers);
  for (std::size_t i = 0; i < serial.powers.size(); ++i) {
    CHECK(serial.converged_flags[i]);
    if (i > 0) CHECK(serial.powers[i] > serial.powers[i - 1]);
  }
  CHECK(serial.stable_intervals.empty());
  CHECK_THROWS_AS(vk_scan(5.0, 1.0, 5, base, g, 1), std::invalid_argument);
}
