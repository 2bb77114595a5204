#pragma once

#include <vector>

#include "nqho/grid.hpp"

namespace nqho {

/// Constants of  i psi_t + psi_xx - alpha x^2 psi + sigma |psi|^2 psi = 0
/// and of its stationary reduction
///   -mu eta + eta_xx - V(x) eta + sigma |eta|^2 eta = 0,   V = alpha x^2.
///
/// Sign convention: the stationary equation above corresponds to
/// psi = eta exp(+i mu t).  Under the opposite phase exp(-i mu t) the linear
/// (sigma = 0, alpha = 1) oscillator has eigenvalues 1 + 2n, which in the
/// stationary form above appear as mu = -(1 + 2n).
struct ModelParams {
  double alpha = 1.0;
  double sigma = 1.0;
  /// Positive shift that keeps the spectral iteration's denominator p + k^2
  /// away from zero.
  double p_shift = 30.0;
  double mu = 10.8;

  /// Throws std::invalid_argument on alpha < 0 or p_shift <= 0.
  void validate() const;
};

/// Superposition of Gaussians exp(-((x - c)/width)^2).
struct InitialCondition {
  std::vector<double> hump_centers{0.0};
  double hump_width_scale = 1.0;
};

/// V(x_i) = alpha x_i^2.
std::vector<double> potential(const Grid& grid, const ModelParams& params);

/// Throws std::invalid_argument if a center lies outside (-L, L) or the width
/// is not positive.
WaveField build_initial_guess(const Grid& grid, const InitialCondition& ic);

/// Max-norm of -mu eta + eta_xx - V eta + sigma |eta|^2 eta, with eta_xx
/// computed spectrally.
double stationary_residual(const WaveField& eta, const ModelParams& params);

inline constexpr int kMaxHermiteOrder = 30;

/// Physicists' Hermite polynomial H_n(x) via H_{n+1} = 2x H_n - 2n H_{n-1}.
/// Throws std::out_of_range for n > kMaxHermiteOrder.
double hermite(int n, double x);

/// Normalized oscillator eigenmode
///   U_n = (2^n n! sqrt(pi))^{-1/2} exp(-x^2/2) H_n(x).
WaveField linear_mode(const Grid& grid, int n);

/// Eigenvalue 1 + 2n of U_n for psi = U exp(-i mu t), alpha = 1, sigma = 0.
double linear_eigenvalue(int n);

}  // namespace nqho
