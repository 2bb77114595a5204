#pragma once

#include <string_view>
#include <vector>

#include "nqho/fourier.hpp"
#include "nqho/grid.hpp"
#include "nqho/model.hpp"

namespace nqho {

/// Numerator of the shifted spectral iteration
///   xi^_{j+1} = [c xi^_j - F[V xi_j] + F[sigma beta_j^2 |xi_j|^2 xi_j]] / (p + k^2).
///
/// kSignedEigenvalue uses c = p - mu; its fixed point solves
///   -mu eta + eta_xx - V eta + sigma |eta|^2 eta = 0.
/// kAbsoluteEigenvalue uses c = p + |mu|; its fixed point solves the same
/// equation with mu replaced by -|mu|.  The two agree for mu <= 0.
enum class IterationForm { kSignedEigenvalue, kAbsoluteEigenvalue };

std::string_view to_string(IterationForm form);

double shift_numerator(const ModelParams& params, IterationForm form);

/// Eigenvalue the fixed point of `form` satisfies in the stationary equation.
double effective_eigenvalue(const ModelParams& params, IterationForm form);

struct SrmConfig {
  /// Cut-off on the normalized change |beta_{j+1} - beta_j| / |beta_j|.
  double tolerance = 1e-15;
  int max_iterations = 10000;
  ModelParams params;
  InitialCondition initial;
  IterationForm form = IterationForm::kSignedEigenvalue;

  void validate() const;
};

enum class SrmStatus {
  kConverged,
  kMaxIterations,
  /// Nonlinear overlap B vanished: sigma ~ 0, nothing to renormalize.
  kLinearProblem,
  /// (S - Re A) / Re B < 0, no real amplitude satisfies the constraint.
  kInadmissibleBeta,
  /// Imaginary parts of the overlaps exceeded 1e-8 |S|.
  kComplexOverlap,
  kNonFinite,
};

std::string_view to_string(SrmStatus status);

/// Terms of the amplitude constraint  S = A + beta^2 B  obtained by projecting
/// the iteration onto conj(xi^) and integrating over k.
struct BetaSolution {
  SrmStatus status = SrmStatus::kConverged;
  double beta = 0.0;
  double s = 0.0;
  Complex a{};
  Complex b{};

  bool ok() const { return status == SrmStatus::kConverged; }
};

struct SrmResult {
  /// eta = beta xi at the last accepted iterate.
  WaveField profile;
  double beta = 0.0;
  std::vector<double> beta_history{};
  /// Number of amplitude evaluations performed (== beta_history.size()).
  int iterations = 0;
  double final_beta_change = 0.0;
  /// stationary_residual(profile) at the form's effective eigenvalue.
  double residual = 0.0;
  bool converged = false;
  SrmStatus status = SrmStatus::kMaxIterations;
};

/// Precomputed pieces of the renormalized iteration for one grid and model.
/// Holds scratch buffers, so one instance must not be shared across threads.
class RenormalizationOperator {
 public:
  RenormalizationOperator(const Grid& grid, const ModelParams& params,
                          IterationForm form = IterationForm::kSignedEigenvalue);

  const Grid& grid() const { return transform_.grid(); }

  /// R_beta[xi^].
  Spectrum apply(const Spectrum& xi_hat, double beta) const;

  BetaSolution solve_beta(const Spectrum& xi_hat) const;

  /// One fused step: given xi and its spectrum, returns the amplitude for xi
  /// and, when admissible, overwrites xi_hat with R_beta[xi^] and xi with its
  /// inverse transform.
  BetaSolution step(std::span<Complex> xi, std::span<Complex> xi_hat) const;

 private:
  struct Split {
    std::vector<Complex> linear;     // (c xi^ - F[V xi]) / (p + k^2)
    std::vector<Complex> nonlinear;  // F[sigma |xi|^2 xi] / (p + k^2)
  };
  void split(std::span<const Complex> xi, std::span<const Complex> xi_hat, Split& out) const;
  BetaSolution amplitude(std::span<const Complex> xi_hat, const Split& parts) const;

  FourierTransformer transform_;
  ModelParams params_;
  double numerator_;
  std::vector<double> potential_;
  std::vector<double> inverse_denominator_;
  mutable Split scratch_;
  mutable std::vector<Complex> work_;
};

Spectrum apply_iteration_operator(const Spectrum& xi_hat, double beta, const ModelParams& params,
                                  IterationForm form = IterationForm::kSignedEigenvalue);

BetaSolution solve_beta(const Spectrum& xi_hat, const ModelParams& params,
                        IterationForm form = IterationForm::kSignedEigenvalue);

/// Alternates the amplitude constraint and the iteration operator, starting
/// from build_initial_guess(grid, config.initial), until the normalized beta
/// change drops below config.tolerance.  Failure to converge is reported in
/// the result rather than thrown.
SrmResult srm_solve(const SrmConfig& config, const Grid& grid);

/// Same iteration from an explicit starting field.
SrmResult srm_solve_from(const SrmConfig& config, const WaveField& start);

}  // namespace nqho
