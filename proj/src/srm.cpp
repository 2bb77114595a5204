#include "nqho/srm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nqho {

std::string_view to_string(IterationForm form) {
  switch (form) {
    case IterationForm::kSignedEigenvalue:
      return "signed";
    case IterationForm::kAbsoluteEigenvalue:
      return "absolute";
  }
  return "unknown";
}

std::string_view to_string(SrmStatus status) {
  switch (status) {
    case SrmStatus::kConverged:
      return "converged";
    case SrmStatus::kMaxIterations:
      return "max_iterations";
    case SrmStatus::kLinearProblem:
      return "linear_problem";
    case SrmStatus::kInadmissibleBeta:
      return "inadmissible_beta";
    case SrmStatus::kComplexOverlap:
      return "complex_overlap";
    case SrmStatus::kNonFinite:
      return "non_finite";
  }
  return "unknown";
}

double shift_numerator(const ModelParams& params, IterationForm form) {
  return form == IterationForm::kSignedEigenvalue ? params.p_shift - params.mu
                                                  : params.p_shift + std::abs(params.mu);
}

double effective_eigenvalue(const ModelParams& params, IterationForm form) {
  return form == IterationForm::kSignedEigenvalue ? params.mu : -std::abs(params.mu);
}

void SrmConfig::validate() const {
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw std::invalid_argument("srm: tolerance must lie in (0, 1)");
  }
  if (max_iterations < 1) throw std::invalid_argument("srm: max_iterations must be >= 1");
  params.validate();
}

RenormalizationOperator::RenormalizationOperator(const Grid& grid, const ModelParams& params,
                                                 IterationForm form)
    : transform_(grid),
      params_(params),
      numerator_(shift_numerator(params, form)),
      potential_(potential(grid, params)),
      inverse_denominator_(grid.size()),
      work_(grid.size()) {
  params.validate();
  const auto k = grid.wavenumbers();
  for (std::size_t m = 0; m < k.size(); ++m) {
    inverse_denominator_[m] = 1.0 / (params.p_shift + k[m] * k[m]);
  }
  scratch_.linear.resize(grid.size());
  scratch_.nonlinear.resize(grid.size());
}

void RenormalizationOperator::split(std::span<const Complex> xi, std::span<const Complex> xi_hat,
                                    Split& out) const {
  const std::size_t n = xi.size();
  for (std::size_t i = 0; i < n; ++i) work_[i] = potential_[i] * xi[i];
  transform_.forward(work_, out.linear);
  for (std::size_t m = 0; m < n; ++m) {
    out.linear[m] = (numerator_ * xi_hat[m] - out.linear[m]) * inverse_denominator_[m];
  }
  for (std::size_t i = 0; i < n; ++i) work_[i] = params_.sigma * std::norm(xi[i]) * xi[i];
  transform_.forward(work_, out.nonlinear);
  for (std::size_t m = 0; m < n; ++m) out.nonlinear[m] *= inverse_denominator_[m];
}

BetaSolution RenormalizationOperator::amplitude(std::span<const Complex> xi_hat,
                                                const Split& parts) const {
  const double dk = grid().dk();
  BetaSolution sol;
  for (std::size_t m = 0; m < xi_hat.size(); ++m) {
    const Complex c = std::conj(xi_hat[m]);
    sol.s += std::norm(xi_hat[m]);
    sol.a += c * parts.linear[m];
    sol.b += c * parts.nonlinear[m];
  }
  sol.s *= dk;
  sol.a *= dk;
  sol.b *= dk;

  if (!std::isfinite(sol.s) || !std::isfinite(std::abs(sol.a)) || !std::isfinite(std::abs(sol.b))) {
    sol.status = SrmStatus::kNonFinite;
    return sol;
  }
  const double scale = std::abs(sol.s);
  if (std::abs(sol.b.real()) < 1e-14 * scale || sol.b.real() == 0.0) {
    sol.status = SrmStatus::kLinearProblem;
    return sol;
  }
  if (std::abs(sol.a.imag()) > 1e-8 * scale || std::abs(sol.b.imag()) > 1e-8 * scale) {
    sol.status = SrmStatus::kComplexOverlap;
    return sol;
  }
  const double beta_squared = (sol.s - sol.a.real()) / sol.b.real();
  if (beta_squared < 0.0) {
    sol.status = SrmStatus::kInadmissibleBeta;
    return sol;
  }
  sol.beta = std::sqrt(beta_squared);
  return sol;
}

Spectrum RenormalizationOperator::apply(const Spectrum& xi_hat, double beta) const {
  WaveField xi(xi_hat.grid());
  transform_.inverse(xi_hat.values(), xi.values());
  Split parts{std::vector<Complex>(xi.size()), std::vector<Complex>(xi.size())};
  split(xi.values(), xi_hat.values(), parts);
  Spectrum out(xi_hat.grid());
  const double b2 = beta * beta;
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = parts.linear[m] + b2 * parts.nonlinear[m];
  return out;
}

BetaSolution RenormalizationOperator::solve_beta(const Spectrum& xi_hat) const {
  WaveField xi(xi_hat.grid());
  transform_.inverse(xi_hat.values(), xi.values());
  Split parts{std::vector<Complex>(xi.size()), std::vector<Complex>(xi.size())};
  split(xi.values(), xi_hat.values(), parts);
  return amplitude(xi_hat.values(), parts);
}

BetaSolution RenormalizationOperator::step(std::span<Complex> xi, std::span<Complex> xi_hat) const {
  split(xi, xi_hat, scratch_);
  BetaSolution sol = amplitude(xi_hat, scratch_);
  if (!sol.ok()) return sol;
  const double b2 = sol.beta * sol.beta;
  for (std::size_t m = 0; m < xi_hat.size(); ++m) {
    xi_hat[m] = scratch_.linear[m] + b2 * scratch_.nonlinear[m];
  }
  transform_.inverse(xi_hat, xi);
  return sol;
}

Spectrum apply_iteration_operator(const Spectrum& xi_hat, double beta, const ModelParams& params,
                                  IterationForm form) {
  return RenormalizationOperator(xi_hat.grid(), params, form).apply(xi_hat, beta);
}

BetaSolution solve_beta(const Spectrum& xi_hat, const ModelParams& params, IterationForm form) {
  return RenormalizationOperator(xi_hat.grid(), params, form).solve_beta(xi_hat);
}

SrmResult srm_solve(const SrmConfig& config, const Grid& grid) {
  return srm_solve_from(config, build_initial_guess(grid, config.initial));
}

SrmResult srm_solve_from(const SrmConfig& config, const WaveField& start) {
  config.validate();
  const Grid& grid = start.grid();
  const RenormalizationOperator op(grid, config.params, config.form);
  FourierTransformer transform(grid);

  WaveField xi = start;
  Spectrum xi_hat(grid);
  transform.forward(xi.values(), xi_hat.values());

  SrmResult result{.profile = WaveField(grid)};
  // xi is overwritten by each step, so keep the iterate the accepted beta
  // belongs to.
  WaveField accepted = xi;
  double previous_beta = 0.0;

  for (int j = 0; j < config.max_iterations; ++j) {
    accepted = xi;
    const bool last = j + 1 == config.max_iterations;
    BetaSolution sol;
    if (last) {
      sol = op.solve_beta(xi_hat);
    } else {
      sol = op.step(xi.values(), xi_hat.values());
    }
    if (!sol.ok()) {
      result.status = sol.status;
      break;
    }
    result.beta = sol.beta;
    result.beta_history.push_back(sol.beta);
    if (j > 0) {
      result.final_beta_change =
          std::abs(sol.beta - previous_beta) / std::max(std::abs(previous_beta), 1e-300);
      if (result.final_beta_change < config.tolerance) {
        result.status = SrmStatus::kConverged;
        break;
      }
    }
    previous_beta = sol.beta;
    if (!last && !xi.all_finite()) {
      result.status = SrmStatus::kNonFinite;
      break;
    }
    if (last) result.status = SrmStatus::kMaxIterations;
  }

  result.iterations = static_cast<int>(result.beta_history.size());
  result.profile = accepted;
  if (!result.beta_history.empty()) result.profile *= result.beta;

  ModelParams residual_params = config.params;
  residual_params.mu = effective_eigenvalue(config.params, config.form);
  result.residual = result.profile.all_finite()
                        ? stationary_residual(result.profile, residual_params)
                        : std::numeric_limits<double>::infinity();
  result.converged = result.status == SrmStatus::kConverged && std::isfinite(result.residual);
  if (result.status == SrmStatus::kConverged && !result.converged) {
    result.status = SrmStatus::kNonFinite;
  }
  return result;
}

}  // namespace nqho
