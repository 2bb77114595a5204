#include "nqho/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nqho/fourier.hpp"

namespace nqho {

void ModelParams::validate() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  if (!(p_shift > 0.0)) throw std::invalid_argument("p_shift must be positive");
  if (!std::isfinite(sigma) || !std::isfinite(mu) || !std::isfinite(alpha) ||
      !std::isfinite(p_shift)) {
    throw std::invalid_argument("model parameters must be finite");
  }
}

std::vector<double> potential(const Grid& grid, const ModelParams& params) {
  std::vector<double> v(grid.size());
  const auto x = grid.nodes();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = params.alpha * x[i] * x[i];
  return v;
}

WaveField build_initial_guess(const Grid& grid, const InitialCondition& ic) {
  if (!(ic.hump_width_scale > 0.0)) {
    throw std::invalid_argument("initial condition: hump width must be positive");
  }
  const double L = grid.half_length();
  for (double c : ic.hump_centers) {
    if (!(c > -L && c < L)) {
      throw std::invalid_argument("initial condition: center " + std::to_string(c) +
                                  " outside (-L, L)");
    }
  }
  WaveField field(grid);
  const auto x = grid.nodes();
  for (std::size_t i = 0; i < field.size(); ++i) {
    double sum = 0.0;
    for (double c : ic.hump_centers) {
      const double s = (x[i] - c) / ic.hump_width_scale;
      sum += std::exp(-s * s);
    }
    field[i] = sum;
  }
  return field;
}

double stationary_residual(const WaveField& eta, const ModelParams& params) {
  const WaveField eta_xx = second_derivative(eta);
  const auto x = eta.grid().nodes();
  double worst = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const double v = params.alpha * x[i] * x[i];
    const Complex r = -params.mu * eta[i] + eta_xx[i] - v * eta[i] +
                      params.sigma * std::norm(eta[i]) * eta[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double hermite(int n, double x) {
  if (n < 0 || n > kMaxHermiteOrder) {
    throw std::out_of_range("hermite: order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxHermiteOrder) + "]");
  }
  double previous = 1.0;
  if (n == 0) return previous;
  double current = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

WaveField linear_mode(const Grid& grid, int n) {
  if (n < 0 || n > kMaxHermiteOrder) {
    throw std::out_of_range("linear_mode: order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxHermiteOrder) + "]");
  }
  const double norm =
      1.0 / std::sqrt(std::ldexp(1.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi));
  WaveField field(grid);
  const auto x = grid.nodes();
  for (std::size_t i = 0; i < field.size(); ++i) {
    field[i] = norm * std::exp(-0.5 * x[i] * x[i]) * hermite(n, x[i]);
  }
  return field;
}

double linear_eigenvalue(int n) { return 1.0 + 2.0 * n; }

}  // namespace nqho
