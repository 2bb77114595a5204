#include "nqho/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nqho {

Grid::Grid(int n_points, double half_length) {
  if (n_points < 4 || !std::has_single_bit(static_cast<unsigned>(n_points))) {
    throw std::invalid_argument("grid: n_points must be a power of two >= 4, got " +
                                std::to_string(n_points));
  }
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw std::invalid_argument("grid: half_length must be positive and finite");
  }
  Data d;
  d.n_points = n_points;
  d.half_length = half_length;
  d.dx = 2.0 * half_length / n_points;
  d.dk = std::numbers::pi / half_length;
  d.nodes.resize(n_points);
  d.wavenumbers.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    d.nodes[i] = -half_length + i * d.dx;
    const int m = i < n_points / 2 ? i : i - n_points;
    d.wavenumbers[i] = m * d.dk;
  }
  data_ = std::make_shared<const Data>(std::move(d));
}

bool Grid::operator==(const Grid& other) const {
  return data_ == other.data_ ||
         (n_points() == other.n_points() && half_length() == other.half_length());
}

Grid make_grid(int n_points, double half_length) { return Grid(n_points, half_length); }

template <class Tag>
GridFunction<Tag>::GridFunction(Grid grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("field length " + std::to_string(values_.size()) +
                                " does not match grid size " + std::to_string(grid_.size()));
  }
}

template <class Tag>
bool GridFunction<Tag>::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

template class GridFunction<PhysicalSpaceTag>;
template class GridFunction<SpectralSpaceTag>;

double compute_power(const WaveField& field) {
  double sum = 0.0;
  for (const auto& v : field.values()) sum += std::norm(v);
  return sum * field.grid().dx();
}

Complex inner_product(const WaveField& a, const WaveField& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("inner_product: grid mismatch");
  Complex sum{};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum * a.grid().dx();
}

double max_abs(const WaveField& field) {
  double m = 0.0;
  for (const auto& v : field.values()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_difference(const WaveField& a, const WaveField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_difference: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_modulus_difference(const WaveField& a, const WaveField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_modulus_difference: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(std::abs(a[i]) - std::abs(b[i])));
  }
  return m;
}

}  // namespace nqho
