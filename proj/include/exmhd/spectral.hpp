#pragma once

#include <complex>
#include <vector>

#include "exmhd/lattice.hpp"

// Complex spectral layer under lattice and hodge. Forward transforms are unnormalized;
// the backward transform divides by the point count. Plans are FFTW_ESTIMATE (alignment
// agnostic, deterministic), cached per dimension vector, creation serialized; execution
// uses the re-entrant new-array interface and is safe to run concurrently.

namespace exmhd {

using Complex = std::complex<double>;

std::vector<Complex> fft_forward(const ScalarField& f);
ScalarField fft_backward(const BoxSpec& box, std::vector<Complex> spec);

// Walks all modes in storage order handing the integer wavenumber vector
// (k_a in (-N_a/2, N_a/2], the Nyquist index reported as +N_a/2).
template <class Fn>
void for_each_mode(const BoxSpec& box, Fn&& fn) {
  int kvec[kMaxDim] = {0};
  int jvec[kMaxDim] = {0};
  const std::size_t total = box.point_count();
  for (std::size_t flat = 0; flat < total; ++flat) {
    fn(flat, kvec);
    for (int a = box.n - 1; a >= 0; --a) {
      if (++jvec[a] < box.dims[a]) {
        kvec[a] = jvec[a] <= box.dims[a] / 2 ? jvec[a] : jvec[a] - box.dims[a];
        break;
      }
      jvec[a] = 0;
      kvec[a] = 0;
    }
  }
}

}  // namespace exmhd
