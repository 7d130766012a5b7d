#include "exmhd/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "exmhd/spectral.hpp"

namespace exmhd {

double BoxSpec::sqrt_g() const { return std::sqrt(metric_det()); }

double BoxSpec::wavenumber(int axis, int k) const {
  return 2.0 * std::numbers::pi * k / lengths[axis];
}

bool BoxSpec::operator==(const BoxSpec& o) const {
  if (n != o.n) return false;
  for (int a = 0; a < n; ++a)
    if (dims[a] != o.dims[a] || lengths[a] != o.lengths[a] || metric[a] != o.metric[a])
      return false;
  return true;
}

BoxSpec build_box(int n, const std::vector<int>& dims, const std::vector<double>& lengths,
                  const std::vector<double>& metric) {
  if (n < 2 || n > kMaxDim)
    throw std::invalid_argument("build_box: n must be in [2," + std::to_string(kMaxDim) + "]");
  if (static_cast<int>(dims.size()) != n || static_cast<int>(lengths.size()) != n ||
      static_cast<int>(metric.size()) != n)
    throw std::invalid_argument("build_box: dims/lengths/metric must each have n entries");
  BoxSpec box;
  box.n = n;
  for (int a = 0; a < n; ++a) {
    if (dims[a] < 8 || dims[a] % 2 != 0)
      throw std::invalid_argument("build_box: axis " + std::to_string(a + 1) +
                                  " size must be even and >= 8");
    if (!(lengths[a] > 0.0))
      throw std::invalid_argument("build_box: axis " + std::to_string(a + 1) +
                                  " length must be positive");
    if (!(metric[a] > 0.0))
      throw std::invalid_argument("build_box: metric entry " + std::to_string(a + 1) +
                                  " must be positive");
    box.dims[a] = dims[a];
    box.lengths[a] = lengths[a];
    box.metric[a] = metric[a];
  }
  return box;
}

ScalarField make_field(const BoxSpec& box, double fill) {
  ScalarField f;
  f.box = box;
  f.v.assign(box.point_count(), fill);
  return f;
}

void point_coords(const BoxSpec& box, std::size_t flat, int* out) {
  for (int a = box.n - 1; a >= 0; --a) {
    out[a] = static_cast<int>(flat % box.dims[a]);
    flat /= box.dims[a];
  }
}

double integrate(const ScalarField& f) {
  return kernels::sum(f.v.data(), f.v.size()) * f.box.sqrt_g() * f.box.cell_volume();
}

double mean(const ScalarField& f) {
  return kernels::sum(f.v.data(), f.v.size()) / static_cast<double>(f.v.size());
}

ScalarField spectral_partial(const ScalarField& f, int axis) {
  return std::move(spectral_partials(f, {axis})[0]);
}

std::vector<ScalarField> spectral_partials(const ScalarField& f,
                                           const std::vector<int>& axes) {
  const BoxSpec& box = f.box;
  for (int a : axes)
    if (a < 0 || a >= box.n) throw std::invalid_argument("spectral_partial: axis out of range");
  std::vector<Complex> spec = fft_forward(f);
  std::vector<ScalarField> out;
  out.reserve(axes.size());
  for (int axis : axes) {
    std::vector<Complex> dspec(spec.size());
    const int nyq = box.dims[axis] / 2;
    for_each_mode(box, [&](std::size_t flat, const int* k) {
      if (k[axis] == nyq)
        dspec[flat] = 0.0;
      else
        dspec[flat] = spec[flat] * Complex(0.0, box.wavenumber(axis, k[axis]));
    });
    out.push_back(fft_backward(box, std::move(dspec)));
  }
  return out;
}

ScalarField dealias(const ScalarField& f) {
  const BoxSpec& box = f.box;
  std::vector<Complex> spec = fft_forward(f);
  for_each_mode(box, [&](std::size_t flat, const int* k) {
    for (int a = 0; a < box.n; ++a) {
      if (3 * std::abs(k[a]) > box.dims[a]) {
        spec[flat] = 0.0;
        break;
      }
    }
  });
  return fft_backward(box, std::move(spec));
}

}  // namespace exmhd
