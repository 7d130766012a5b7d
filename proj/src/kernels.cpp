#include "exmhd/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace exmhd::kernels {

namespace scalar {

void axpy(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void madd(double* out, const double* a, const double* b, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += (a[i] * b[i]) * c;
}

void mul(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void scaled_copy(double* out, const double* in, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = c * in[i];
}

void scale(double* y, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

double sum(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double min_val(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double max_val(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
// Implemented in kernels_avx2.cpp, compiled with -mavx2 and only ever called after a
// runtime cpuid check.
void axpy(double* y, double a, const double* x, std::size_t n);
void madd(double* out, const double* a, const double* b, double c, std::size_t n);
void mul(double* out, const double* a, const double* b, std::size_t n);
void scaled_copy(double* out, const double* in, double c, std::size_t n);
void scale(double* y, double a, std::size_t n);
double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double max_abs(const double* x, std::size_t n);
double min_val(const double* x, std::size_t n);
double max_val(const double* x, std::size_t n);
}  // namespace avx2
#endif

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Lane pick_initial_lane() {
  if (const char* env = std::getenv("EXMHD_SIMD")) {
    std::string v(env);
    if (v == "scalar") return Lane::scalar;
    if (v == "avx2") {
      if (avx2_available()) return Lane::avx2;
      std::fputs("exmhd: EXMHD_SIMD=avx2 but cpu lacks avx2, using scalar\n", stderr);
      return Lane::scalar;
    }
    std::fputs("exmhd: unknown EXMHD_SIMD value, using auto\n", stderr);
  }
  return avx2_available() ? Lane::avx2 : Lane::scalar;
}

std::atomic<Lane> g_lane{pick_initial_lane()};

}  // namespace

Lane active_lane() { return g_lane.load(std::memory_order_relaxed); }

void set_lane(Lane lane) {
  if (lane == Lane::avx2 && !avx2_available())
    throw std::runtime_error("avx2 lane not available on this cpu");
  g_lane.store(lane, std::memory_order_relaxed);
}

#if defined(__x86_64__) || defined(_M_X64)
#define EXMHD_DISPATCH(fn, ...) \
  return active_lane() == Lane::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define EXMHD_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void axpy(double* y, double a, const double* x, std::size_t n) {
  EXMHD_DISPATCH(axpy, y, a, x, n);
}
void madd(double* out, const double* a, const double* b, double c, std::size_t n) {
  EXMHD_DISPATCH(madd, out, a, b, c, n);
}
void mul(double* out, const double* a, const double* b, std::size_t n) {
  EXMHD_DISPATCH(mul, out, a, b, n);
}
void scaled_copy(double* out, const double* in, double c, std::size_t n) {
  EXMHD_DISPATCH(scaled_copy, out, in, c, n);
}
void scale(double* y, double a, std::size_t n) { EXMHD_DISPATCH(scale, y, a, n); }
double sum(const double* x, std::size_t n) { EXMHD_DISPATCH(sum, x, n); }
double dot(const double* a, const double* b, std::size_t n) { EXMHD_DISPATCH(dot, a, b, n); }
double max_abs(const double* x, std::size_t n) { EXMHD_DISPATCH(max_abs, x, n); }
double min_val(const double* x, std::size_t n) { EXMHD_DISPATCH(min_val, x, n); }
double max_val(const double* x, std::size_t n) { EXMHD_DISPATCH(max_val, x, n); }

#undef EXMHD_DISPATCH

}  // namespace exmhd::kernels
