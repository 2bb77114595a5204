#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace nqho {

using Complex = std::complex<double>;

/// Uniform periodic grid on [-L, L) together with its discrete wavenumbers.
///
/// Node i sits at x_i = -L + i*dx with dx = 2L/N.  Wavenumbers are integer
/// multiples of dk = pi/L stored in native FFT bin order: bin m holds m*dk
/// for m < N/2 and (m - N)*dk otherwise, so the Nyquist bin is -N/2*dk.
///
/// Grids are immutable and cheap to copy; copies share the node and
/// wavenumber tables.
class Grid {
 public:
  Grid(int n_points, double half_length);

  int n_points() const { return data_->n_points; }
  std::size_t size() const { return static_cast<std::size_t>(data_->n_points); }
  double half_length() const { return data_->half_length; }
  double dx() const { return data_->dx; }
  double dk() const { return data_->dk; }
  double max_wavenumber() const { return data_->dk * (data_->n_points / 2); }

  std::span<const double> nodes() const { return data_->nodes; }
  std::span<const double> wavenumbers() const { return data_->wavenumbers; }

  bool operator==(const Grid& other) const;

 private:
  struct Data {
    int n_points;
    double half_length;
    double dx;
    double dk;
    std::vector<double> nodes;
    std::vector<double> wavenumbers;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws std::invalid_argument unless n_points >= 4 is a power of two and
/// half_length > 0.
Grid make_grid(int n_points, double half_length);

/// Complex samples tied to the grid they live on.  The tag separates
/// physical-space fields from their spectra at the type level.
template <class Tag>
class GridFunction {
 public:
  explicit GridFunction(Grid grid) : grid_(std::move(grid)), values_(grid_.size()) {}

  GridFunction(Grid grid, std::vector<Complex> values);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }

  const Complex& operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }

  bool all_finite() const;

  GridFunction& operator*=(double s) {
    for (auto& v : values_) v *= s;
    return *this;
  }

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

struct PhysicalSpaceTag {};
struct SpectralSpaceTag {};

/// Samples of psi, eta or xi at the grid nodes.
using WaveField = GridFunction<PhysicalSpaceTag>;
/// Fourier coefficients in native bin order.
using Spectrum = GridFunction<SpectralSpaceTag>;

extern template class GridFunction<PhysicalSpaceTag>;
extern template class GridFunction<SpectralSpaceTag>;

/// Periodic Riemann sum of |psi|^2 dx.
double compute_power(const WaveField& field);

/// sum conj(a_i) b_i dx.
Complex inner_product(const WaveField& a, const WaveField& b);

double max_abs(const WaveField& field);

/// Max-norm of the pointwise difference |a_i - b_i|.
double max_abs_difference(const WaveField& a, const WaveField& b);

/// Max-norm of ||a_i| - |b_i||.
double max_modulus_difference(const WaveField& a, const WaveField& b);

}  // namespace nqho
