#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nqho/model.hpp"

using namespace nqho;

TEST_CASE("potential values") {
  const Grid g = make_grid(8, 4.0);
  ModelParams p;
  p.alpha = 0.0;
  for (double v : potential(g, p)) CHECK(v == 0.0);

  p.alpha = 1.0;
  const auto v = potential(g, p);
  CHECK(g.nodes()[7] == 3.0);
  CHECK(v[7] == 9.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(v[i] == doctest::Approx(v[g.size() - i]));

  p.alpha = 0.5;
  const auto w = potential(make_grid(4, std::numbers::pi), p);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(w[0] == doctest::Approx(pi2 / 2));
  CHECK(w[1] == doctest::Approx(pi2 / 8));
  CHECK(w[2] == doctest::Approx(0.0));
  CHECK(w[3] == doctest::Approx(pi2 / 8));
}

TEST_CASE("model parameter validation") {
  ModelParams p;
  CHECK_NOTHROW(p.validate());
  p.alpha = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.alpha = 1.0;
  p.p_shift = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("initial guess") {
  const Grid g = make_grid(1024, 20.0);
  const WaveField one = build_initial_guess(g, {{0.0}, 1.0});
  CHECK(g.nodes()[512] == 0.0);
  CHECK(one[512] == Complex(1.0, 0.0));
  CHECK(max_abs(one) == 1.0);

  const WaveField two = build_initial_guess(g, {{-10.0, 10.0}, 1.0});
  CHECK(two[512].real() == doctest::Approx(2.0 * std::exp(-100.0)));

  const WaveField three = build_initial_guess(g, {{-10.0, 0.0, 10.0}, 1.0});
  CHECK(std::abs(three[256] - 1.0) < 1e-12);  // x = -10
  CHECK(std::abs(three[512] - 1.0) < 1e-12);
  CHECK(std::abs(three[768] - 1.0) < 1e-12);  // x = 10

  CHECK_THROWS_AS(build_initial_guess(g, {{25.0}, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_initial_guess(g, {{0.0}, 0.0}), std::invalid_argument);
}

TEST_CASE("Hermite polynomials") {
  CHECK(hermite(0, 0.7) == 1.0);
  CHECK(hermite(2, 1.0) == 2.0);
  CHECK(hermite(3, 2.0) == 40.0);
  for (double x : {-1.3, 0.0, 0.4, 2.2}) {
    CHECK(hermite(1, x) == doctest::Approx(2 * x));
    CHECK(hermite(4, x) == doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12));
    CHECK(hermite(5, -x) == doctest::Approx(-hermite(5, x)));
  }
  CHECK_NOTHROW(hermite(kMaxHermiteOrder, 1.0));
  CHECK_THROWS_AS(hermite(kMaxHermiteOrder + 1, 1.0), std::out_of_range);
}

TEST_CASE("linear oscillator modes") {
  const Grid g = make_grid(1024, 20.0);
  CHECK(linear_eigenvalue(0) == 1.0);
  CHECK(linear_eigenvalue(2) == 5.0);

  std::vector<WaveField> modes;
  for (int n = 0; n <= 10; ++n) modes.push_back(linear_mode(g, n));
  for (int n = 0; n <= 10; ++n) {
    CHECK(std::abs(compute_power(modes[n]) - 1.0) <= 1e-10);
    for (int m = 0; m < n; ++m) CHECK(std::abs(inner_product(modes[m], modes[n])) <= 1e-10);
  }
  CHECK(std::abs(modes[1][512]) == 0.0);
  CHECK(modes[0][512].real() == doctest::Approx(std::pow(std::numbers::pi, -0.25)));
}

TEST_CASE("stationary residual") {
  const Grid g = make_grid(1024, 20.0);
  ModelParams p{.alpha = 1.0, .sigma = 1.0, .p_shift = 30.0, .mu = 3.0};
  CHECK(stationary_residual(WaveField(g), p) == 0.0);

  p.sigma = 0.0;
  for (int n = 0; n <= 5; ++n) {
    p.mu = -linear_eigenvalue(n);
    CHECK(stationary_residual(linear_mode(g, n), p) <= 1e-8);
  }
  // A wrong eigenvalue leaves a residual of order |shift| * max|U_0|.
  p.mu = 0.0;
  CHECK(stationary_residual(linear_mode(g, 0), p) > 0.5);
}
