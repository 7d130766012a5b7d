#pragma once

// Shared helpers for tests: analytic sampling, reproducible random fields, band
// limiting. The random generator is seeded mt19937_64 with an explicit bits-to-double
// mapping, so expectations frozen here stay stable across library changes.

#include <cmath>
#include <numbers>
#include <random>

#include "exmhd/exterior.hpp"
#include "exmhd/spectral.hpp"

namespace testutil {

constexpr double kTau = 2.0 * std::numbers::pi;

template <class F>
exmhd::ScalarField sample(const exmhd::BoxSpec& box, F&& f) {
  exmhd::ScalarField out = exmhd::make_field(box);
  int c[exmhd::kMaxDim];
  double x[exmhd::kMaxDim];
  for (std::size_t p = 0; p < out.v.size(); ++p) {
    exmhd::point_coords(box, p, c);
    for (int a = 0; a < box.n; ++a) x[a] = box.coordinate(a, c[a]);
    out.v[p] = f(x);
  }
  return out;
}

inline double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

// zero every mode with |k_a| > band on any axis
inline exmhd::ScalarField band_limit(const exmhd::ScalarField& f, int band) {
  auto spec = exmhd::fft_forward(f);
  exmhd::for_each_mode(f.box, [&](std::size_t flat, const int* k) {
    for (int a = 0; a < f.box.n; ++a)
      if (std::abs(k[a]) > band) {
        spec[flat] = 0.0;
        return;
      }
  });
  return exmhd::fft_backward(f.box, std::move(spec));
}

inline exmhd::ScalarField random_field(const exmhd::BoxSpec& box, std::uint64_t seed,
                                       int band = 0) {
  std::mt19937_64 rng(seed);
  exmhd::ScalarField f = exmhd::make_field(box);
  for (auto& v : f.v) v = uniform_pm1(rng);
  if (band > 0) f = band_limit(f, band);
  return f;
}

inline exmhd::KForm random_form(const exmhd::BoxSpec& box, int degree, std::uint64_t seed,
                                int band = 0) {
  exmhd::KForm f = exmhd::make_kform(box, degree);
  for (std::size_t ci = 0; ci < f.comp.size(); ++ci)
    f.comp[ci] = random_field(box, seed + 101 * ci, band);
  return f;
}

inline exmhd::VecField random_vec(const exmhd::BoxSpec& box, std::uint64_t seed,
                                  int band = 0) {
  exmhd::VecField x = exmhd::make_vecfield(box);
  for (int i = 0; i < box.n; ++i) x.comp[i] = random_field(box, seed + 17 * i, band);
  return x;
}

inline double max_diff(const exmhd::ScalarField& a, const exmhd::ScalarField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::fabs(a.v[i] - b.v[i]));
  return m;
}

inline double max_diff(const exmhd::KForm& a, const exmhd::KForm& b) {
  double m = 0.0;
  for (std::size_t ci = 0; ci < a.comp.size(); ++ci)
    m = std::max(m, max_diff(a.comp[ci], b.comp[ci]));
  return m;
}

inline double form_max_abs(const exmhd::KForm& f) {
  double m = 0.0;
  for (const auto& c : f.comp) m = std::max(m, exmhd::max_abs(c));
  return m;
}

}  // namespace testutil
