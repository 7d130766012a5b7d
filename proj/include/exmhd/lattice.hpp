#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "exmhd/kernels.hpp"
#include "exmhd/multi_index.hpp"

// Flat periodic box [0,L_1) x ... x [0,L_n) with a constant diagonal metric
// g = diag(g_11..g_nn), sampled on a uniform lattice, row-major storage with the last
// axis fastest. Sample points are x_i = j * L_i/N_i.

namespace exmhd {

struct BoxSpec {
  int n = 0;
  std::array<int, kMaxDim> dims{};
  std::array<double, kMaxDim> lengths{};
  std::array<double, kMaxDim> metric{};

  std::size_t point_count() const {
    std::size_t p = 1;
    for (int a = 0; a < n; ++a) p *= static_cast<std::size_t>(dims[a]);
    return p;
  }
  double cell_volume() const {
    double dv = 1.0;
    for (int a = 0; a < n; ++a) dv *= lengths[a] / dims[a];
    return dv;
  }
  double metric_det() const {
    double g = 1.0;
    for (int a = 0; a < n; ++a) g *= metric[a];
    return g;
  }
  double sqrt_g() const;
  double spacing(int axis) const { return lengths[axis] / dims[axis]; }
  double coordinate(int axis, int index) const { return index * spacing(axis); }
  // physical angular wavenumber of integer mode k on an axis
  double wavenumber(int axis, int k) const;

  bool operator==(const BoxSpec& o) const;
};

// Validates: 2 <= n <= 6, every axis even and >= 8, lengths and metric entries positive.
BoxSpec build_box(int n, const std::vector<int>& dims, const std::vector<double>& lengths,
                  const std::vector<double>& metric);

struct ScalarField {
  BoxSpec box;
  std::vector<double> v;
};

ScalarField make_field(const BoxSpec& box, double fill = 0.0);

// Lattice coordinates of a flat index (row-major, last axis fastest).
void point_coords(const BoxSpec& box, std::size_t flat, int* out);

// sum_points f * sqrt(g) * dV  (exact for band-limited integrands)
double integrate(const ScalarField& f);
double mean(const ScalarField& f);

// Fourier differentiation along one axis; the Nyquist mode has no well-defined odd
// derivative on a real lattice and is zeroed.
ScalarField spectral_partial(const ScalarField& f, int axis);

// Same as repeated spectral_partial but with one forward transform shared across axes;
// out[i] receives d f / d x^axes[i].
std::vector<ScalarField> spectral_partials(const ScalarField& f,
                                           const std::vector<int>& axes);

// Two-thirds rule: zero every mode with 3|k_a| > N_a on any axis.
ScalarField dealias(const ScalarField& f);

// In-place arithmetic used throughout; all loops route through the kernels lane.
inline void add_scaled(ScalarField& y, double a, const ScalarField& x) {
  kernels::axpy(y.v.data(), a, x.v.data(), y.v.size());
}
inline void accumulate_product(ScalarField& out, const ScalarField& a,
                               const ScalarField& b, double c) {
  kernels::madd(out.v.data(), a.v.data(), b.v.data(), c, out.v.size());
}
inline ScalarField product(const ScalarField& a, const ScalarField& b) {
  ScalarField out = make_field(a.box);
  kernels::mul(out.v.data(), a.v.data(), b.v.data(), out.v.size());
  return out;
}
inline void scale_field(ScalarField& y, double a) {
  kernels::scale(y.v.data(), a, y.v.size());
}
inline double max_abs(const ScalarField& f) {
  return kernels::max_abs(f.v.data(), f.v.size());
}

}  // namespace exmhd
