#include "nqho/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nqho {
namespace {

// The FFTW planner is not thread-safe; plan execution through the new-array
// interface is.  Plans live for the lifetime of the process.
struct PlanSet {
  fftw_plan forward_out_of_place;
  fftw_plan inverse_out_of_place;
  fftw_plan forward_in_place;
  fftw_plan inverse_in_place;
};

const PlanSet& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, PlanSet> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto* a = fftw_alloc_complex(n);
  auto* b = fftw_alloc_complex(n);
  constexpr unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  // FFTW_BACKWARD carries the exp(+i...) kernel used by our forward transform.
  PlanSet set{
      fftw_plan_dft_1d(n, a, b, FFTW_BACKWARD, flags),
      fftw_plan_dft_1d(n, a, b, FFTW_FORWARD, flags),
      fftw_plan_dft_1d(n, a, a, FFTW_BACKWARD, flags),
      fftw_plan_dft_1d(n, a, a, FFTW_FORWARD, flags),
  };
  fftw_free(a);
  fftw_free(b);
  return cache.emplace(n, set).first->second;
}

fftw_complex* as_fftw(std::span<Complex> s) { return reinterpret_cast<fftw_complex*>(s.data()); }
fftw_complex* as_fftw(std::span<const Complex> s) {
  // FFTW never writes through the input pointer of an out-of-place plan.
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(s.data()));
}

void execute(fftw_plan out_of_place, fftw_plan in_place, std::span<const Complex> in,
             std::span<Complex> out) {
  if (in.size() != out.size()) throw std::invalid_argument("transform: size mismatch");
  if (in.data() == out.data()) {
    fftw_execute_dft(in_place, as_fftw(out), as_fftw(out));
  } else {
    fftw_execute_dft(out_of_place, as_fftw(in), as_fftw(out));
  }
}

}  // namespace

FourierTransformer::FourierTransformer(const Grid& grid) : grid_(grid) {
  const auto& set = plans_for(grid.n_points());
  forward_plan_ = set.forward_out_of_place;
  inverse_plan_ = set.inverse_out_of_place;
  forward_in_place_plan_ = set.forward_in_place;
  inverse_in_place_plan_ = set.inverse_in_place;
  const double root_two_pi = std::sqrt(2.0 * std::numbers::pi);
  forward_scale_ = grid.dx() / root_two_pi;
  inverse_scale_ = grid.dk() / root_two_pi;
}

void FourierTransformer::raw_forward(std::span<const Complex> in, std::span<Complex> out) const {
  execute(forward_plan_, forward_in_place_plan_, in, out);
}

void FourierTransformer::raw_inverse(std::span<const Complex> in, std::span<Complex> out) const {
  execute(inverse_plan_, inverse_in_place_plan_, in, out);
}

// exp(+i k_m x_j) = (-1)^m exp(+2 pi i jm/N) for x_j = -L + j dx.
void FourierTransformer::forward(std::span<const Complex> in, std::span<Complex> out) const {
  raw_forward(in, out);
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] *= (m % 2 == 0) ? forward_scale_ : -forward_scale_;
  }
}

void FourierTransformer::inverse(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.data() == out.data()) {
    for (std::size_t m = 0; m < out.size(); ++m) {
      if (m % 2 == 1) out[m] = -out[m];
    }
    raw_inverse(out, out);
  } else {
    std::vector<Complex> phased(in.begin(), in.end());
    for (std::size_t m = 1; m < phased.size(); m += 2) phased[m] = -phased[m];
    raw_inverse(phased, out);
  }
  for (auto& v : out) v *= inverse_scale_;
}

Spectrum forward_transform(const WaveField& field) {
  Spectrum out(field.grid());
  FourierTransformer(field.grid()).forward(field.values(), out.values());
  return out;
}

WaveField inverse_transform(const Spectrum& spectrum) {
  WaveField out(spectrum.grid());
  FourierTransformer(spectrum.grid()).inverse(spectrum.values(), out.values());
  return out;
}

WaveField second_derivative(const WaveField& field) {
  const auto& grid = field.grid();
  FourierTransformer transform(grid);
  WaveField out(grid);
  transform.forward(field.values(), out.values());
  const auto k = grid.wavenumbers();
  for (std::size_t m = 0; m < out.size(); ++m) out[m] *= -k[m] * k[m];
  transform.inverse(out.values(), out.values());
  return out;
}

WaveField resample(const WaveField& field, const Grid& target) {
  const auto& source = field.grid();
  const Spectrum spectrum = forward_transform(field);
  const auto k = source.wavenumbers();
  const std::size_t nyquist = source.size() / 2;
  const double scale = source.dk() / std::sqrt(2.0 * std::numbers::pi);
  const double lo = -source.half_length();
  const double hi = source.half_length();

  WaveField out(target);
  const auto x = target.nodes();
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (x[j] < lo || x[j] >= hi) continue;
    Complex sum{};
    for (std::size_t m = 0; m < spectrum.size(); ++m) {
      if (m == nyquist) {
        sum += spectrum[m] * std::cos(k[m] * x[j]);
      } else {
        sum += spectrum[m] * std::polar(1.0, -k[m] * x[j]);
      }
    }
    out[j] = scale * sum;
  }
  return out;
}

}  // namespace nqho
