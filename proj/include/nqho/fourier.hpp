#pragma once

#include <span>

#include "nqho/grid.hpp"

struct fftw_plan_s;

namespace nqho {

// Transform convention
// --------------------
// Forward:  f^(k_m) = dx/sqrt(2 pi) * sum_j f(x_j) exp(+i k_m x_j)
// Inverse:  f(x_j)  = dk/sqrt(2 pi) * sum_m f^(k_m) exp(-i k_m x_j)
//
// The forward kernel is exp(+ikx).  Because dx*dk*N = 2 pi the round trip is
// the identity, and sum |f|^2 dx == sum |f^|^2 dk holds with no extra factor.
// Node phases exp(+i k_m x_j) are taken with x_j = -L + j dx, so a field that
// is real and even about x = 0 has a real spectrum.

/// FFTW-backed transform bound to one grid.  Plans are shared process-wide
/// and executing them is thread-safe, so instances are cheap to construct.
class FourierTransformer {
 public:
  explicit FourierTransformer(const Grid& grid);

  const Grid& grid() const { return grid_; }

  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void inverse(std::span<const Complex> in, std::span<Complex> out) const;

  /// Unscaled DFT with the exp(+2 pi i jm/N) kernel and no node phases.
  /// Intended for inner loops where phases and scales are folded into a
  /// precomputed multiplier.  raw_inverse(raw_forward(f)) == N f.
  void raw_forward(std::span<const Complex> in, std::span<Complex> out) const;
  void raw_inverse(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  Grid grid_;
  // forward / inverse, out-of-place then in-place
  fftw_plan_s* forward_plan_;
  fftw_plan_s* inverse_plan_;
  fftw_plan_s* forward_in_place_plan_;
  fftw_plan_s* inverse_in_place_plan_;
  double forward_scale_;
  double inverse_scale_;
};

Spectrum forward_transform(const WaveField& field);
WaveField inverse_transform(const Spectrum& spectrum);

/// Spectral second derivative: inverse[-k^2 forward[f]].
WaveField second_derivative(const WaveField& field);

/// Evaluates the trigonometric interpolant of `field` at the nodes of
/// `target`.  Nodes outside the source box [-L, L) are set to zero, i.e. the
/// source is assumed to have decayed at its boundary.
WaveField resample(const WaveField& field, const Grid& target);

}  // namespace nqho
