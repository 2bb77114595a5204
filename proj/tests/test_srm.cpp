#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nqho/fourier.hpp"
#include "nqho/srm.hpp"

using namespace nqho;

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

Spectrum naive_forward(const WaveField& f) {
  const Grid& g = f.grid();
  Spectrum out(g);
  for (std::size_t m = 0; m < g.size(); ++m) {
    Complex sum{};
    for (std::size_t j = 0; j < g.size(); ++j) {
      sum += f[j] * std::polar(1.0, g.wavenumbers()[m] * g.nodes()[j]);
    }
    out[m] = sum * g.dx() * kInvSqrt2Pi;
  }
  return out;
}

WaveField naive_inverse(const Spectrum& s) {
  const Grid& g = s.grid();
  WaveField out(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    Complex sum{};
    for (std::size_t m = 0; m < g.size(); ++m) {
      sum += s[m] * std::polar(1.0, -g.wavenumbers()[m] * g.nodes()[j]);
    }
    out[j] = sum * g.dk() * kInvSqrt2Pi;
  }
  return out;
}

// The iteration written out term by term with direct DFT sums.
Spectrum reference_operator(const Spectrum& xi_hat, double beta, const ModelParams& p,
                            double numerator) {
  const Grid& g = xi_hat.grid();
  const WaveField xi = naive_inverse(xi_hat);
  WaveField vxi(g), cubic(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.nodes()[j];
    vxi[j] = p.alpha * x * x * xi[j];
    cubic[j] = p.sigma * beta * beta * std::norm(xi[j]) * xi[j];
  }
  const Spectrum fv = naive_forward(vxi);
  const Spectrum fc = naive_forward(cubic);
  Spectrum out(g);
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double k = g.wavenumbers()[m];
    out[m] = (numerator * xi_hat[m] - fv[m] + fc[m]) / (p.p_shift + k * k);
  }
  return out;
}

Spectrum gaussian_spectrum(const Grid& g, double width) {
  WaveField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.nodes()[i] / width;
    f[i] = std::exp(-x * x);
  }
  return forward_transform(f);
}

double overlap(const Spectrum& a, const Spectrum& b) {
  Complex sum{};
  for (std::size_t m = 0; m < a.size(); ++m) sum += std::conj(a[m]) * b[m];
  return (sum * a.grid().dk()).real();
}

SrmConfig single_config() {
  SrmConfig c;
  c.params = {.alpha = 1.0, .sigma = 1.0, .p_shift = 30.0, .mu = 10.8};
  c.tolerance = 1e-15;
  c.initial.hump_centers = {0.0};
  return c;
}

double peak(const WaveField& f) { return max_abs(f); }

}  // namespace

TEST_CASE("iteration numerator") {
  ModelParams p{.alpha = 1.0, .sigma = 1.0, .p_shift = 30.0, .mu = 10.8};
  CHECK(shift_numerator(p, IterationForm::kSignedEigenvalue) == doctest::Approx(19.2));
  CHECK(shift_numerator(p, IterationForm::kAbsoluteEigenvalue) == doctest::Approx(40.8));
  CHECK(effective_eigenvalue(p, IterationForm::kSignedEigenvalue) == 10.8);
  CHECK(effective_eigenvalue(p, IterationForm::kAbsoluteEigenvalue) == -10.8);
  p.mu = -2.0;
  CHECK(shift_numerator(p, IterationForm::kSignedEigenvalue) ==
        shift_numerator(p, IterationForm::kAbsoluteEigenvalue));
}

TEST_CASE("operator on trivial inputs") {
  const Grid g = make_grid(64, 5.0);
  ModelParams p{.alpha = 0.0, .sigma = 0.0, .p_shift = 30.0, .mu = 4.0};
  CHECK(max_abs(inverse_transform(apply_iteration_operator(Spectrum(g), 1.0, p))) == 0.0);

  Spectrum delta(g);
  delta[0] = 1.0;
  for (auto form : {IterationForm::kSignedEigenvalue, IterationForm::kAbsoluteEigenvalue}) {
    const Spectrum out = apply_iteration_operator(delta, 2.0, p, form);
    const double expected = form == IterationForm::kSignedEigenvalue ? (30.0 - 4.0) / 30.0
                                                                     : (30.0 + 4.0) / 30.0;
    CHECK(std::abs(out[0] - expected) < 1e-14);
    for (std::size_t m = 1; m < g.size(); ++m) CHECK(std::abs(out[m]) < 1e-14);
  }
}

TEST_CASE("operator matches direct evaluation") {
  const Grid g = make_grid(32, 4.0);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d;
  Spectrum xi_hat(g);
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double k = g.wavenumbers()[m];
    xi_hat[m] = Complex(d(rng), d(rng)) * std::exp(-0.1 * k * k);
  }
  const ModelParams p{.alpha = 0.7, .sigma = 1.3, .p_shift = 25.0, .mu = 2.5};
  for (auto form : {IterationForm::kSignedEigenvalue, IterationForm::kAbsoluteEigenvalue}) {
    const Spectrum fast = apply_iteration_operator(xi_hat, 1.7, p, form);
    const Spectrum slow = reference_operator(xi_hat, 1.7, p, shift_numerator(p, form));
    double err = 0.0, scale = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
      err = std::max(err, std::abs(fast[m] - slow[m]));
      scale = std::max(scale, std::abs(slow[m]));
    }
    CHECK(err <= 1e-12 * scale);
  }
}

TEST_CASE("amplitude constraint") {
  const Grid g = make_grid(256, 4.5);
  const ModelParams p{.alpha = 1.0, .sigma = 1.0, .p_shift = 30.0, .mu = 10.8};
  const Spectrum xi_hat = gaussian_spectrum(g, 1.0);

  const BetaSolution b1 = solve_beta(xi_hat, p);
  REQUIRE(b1.ok());
  CHECK(b1.beta > 0.0);

  // <xi^, R_beta xi^> reproduces S at the solved amplitude.
  const Spectrum r = apply_iteration_operator(xi_hat, b1.beta, p);
  CHECK(overlap(xi_hat, r) == doctest::Approx(b1.s).epsilon(1e-10));
  CHECK(overlap(xi_hat, xi_hat) == doctest::Approx(b1.s).epsilon(1e-12));

  // Doubling xi halves beta.
  Spectrum twice = xi_hat;
  twice *= 2.0;
  const BetaSolution b2 = solve_beta(twice, p);
  REQUIRE(b2.ok());
  CHECK(b2.beta == doctest::Approx(b1.beta / 2).epsilon(1e-12));

  ModelParams linear = p;
  linear.sigma = 0.0;
  CHECK(solve_beta(xi_hat, linear).status == SrmStatus::kLinearProblem);
}

TEST_CASE("single hump converges") {
  const Grid g = make_grid(256, 4.5);
  const SrmResult r = srm_solve(single_config(), g);
  REQUIRE(r.converged);
  CHECK(r.status == SrmStatus::kConverged);
  CHECK(r.residual <= 1e-8);
  CHECK(r.final_beta_change < 1e-15);
  CHECK(r.iterations == static_cast<int>(r.beta_history.size()));
  CHECK(r.beta == r.beta_history.back());
  CHECK(compute_power(r.profile) > 0.0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    CHECK(std::abs(r.profile[i] - r.profile[g.size() - i]) < 1e-8);
  }
}

TEST_CASE("result does not depend on the starting amplitude") {
  const Grid g = make_grid(256, 4.5);
  const SrmConfig c = single_config();
  WaveField start = build_initial_guess(g, c.initial);
  const SrmResult a = srm_solve_from(c, start);
  start *= 2.0;
  const SrmResult b = srm_solve_from(c, start);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  CHECK(max_abs_difference(a.profile, b.profile) <= 1e-8);
}

TEST_CASE("peak amplitude trends") {
  const Grid g = make_grid(256, 4.5);
  SrmConfig c = single_config();
  double last = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    c.params.alpha = alpha;
    const SrmResult r = srm_solve(c, g);
    REQUIRE(r.converged);
    CHECK(peak(r.profile) > last);
    last = peak(r.profile);
  }
  c = single_config();
  last = 1e300;
  for (double sigma : {0.5, 1.0, 2.0}) {
    c.params.sigma = sigma;
    const SrmResult r = srm_solve(c, g);
    REQUIRE(r.converged);
    CHECK(peak(r.profile) < last);
    last = peak(r.profile);
  }
}

TEST_CASE("failures are reported, not thrown") {
  const Grid g = make_grid(256, 4.5);
  SrmConfig c = single_config();
  c.max_iterations = 3;
  const SrmResult capped = srm_solve(c, g);
  CHECK_FALSE(capped.converged);
  CHECK(capped.status == SrmStatus::kMaxIterations);
  CHECK(capped.iterations == 3);

  c = single_config();
  c.params.sigma = 0.0;
  const SrmResult linear = srm_solve(c, g);
  CHECK_FALSE(linear.converged);
  CHECK(linear.status == SrmStatus::kLinearProblem);

  c = single_config();
  c.tolerance = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
