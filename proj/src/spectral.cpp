#include "exmhd/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace exmhd {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// In-place c2c plans per dimension vector. FFTW plan creation is not thread-safe;
// execution through fftw_execute_dft on distinct buffers is.
const PlanPair& plans_for(const BoxSpec& box) {
  static std::mutex mutex;
  static std::map<std::vector<int>, PlanPair> cache;

  std::vector<int> key(box.dims.begin(), box.dims.begin() + box.n);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  fftw_complex* buf = fftw_alloc_complex(box.point_count());
  PlanPair p;
  p.fwd = fftw_plan_dft(box.n, key.data(), buf, buf, FFTW_FORWARD,
                        FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft(box.n, key.data(), buf, buf, FFTW_BACKWARD,
                        FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  return cache.emplace(std::move(key), p).first->second;
}

}  // namespace

std::vector<Complex> fft_forward(const ScalarField& f) {
  const PlanPair& plans = plans_for(f.box);
  std::vector<Complex> spec(f.v.size());
  for (std::size_t i = 0; i < f.v.size(); ++i) spec[i] = f.v[i];
  auto* raw = reinterpret_cast<fftw_complex*>(spec.data());
  fftw_execute_dft(plans.fwd, raw, raw);
  return spec;
}

ScalarField fft_backward(const BoxSpec& box, std::vector<Complex> spec) {
  const PlanPair& plans = plans_for(box);
  auto* raw = reinterpret_cast<fftw_complex*>(spec.data());
  fftw_execute_dft(plans.bwd, raw, raw);
  ScalarField out = make_field(box);
  const double norm = 1.0 / static_cast<double>(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) out.v[i] = spec[i].real() * norm;
  return out;
}

}  // namespace exmhd
