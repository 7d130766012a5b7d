#pragma once

#include <cstddef>

// Pointwise array kernels behind the field arithmetic. Every kernel has a scalar
// reference implementation and, on x86 with AVX2, a vector variant selected once at
// startup. The elementwise kernels are bitwise identical across lanes (same per-element
// operation order, no FMA); the reductions use fixed four-lane partial sums and are
// equivalence-tested against the scalar lane instead.
//
// Lane selection: auto-detect, overridable with EXMHD_SIMD=scalar|avx2.

namespace exmhd::kernels {

enum class Lane { scalar, avx2 };

Lane active_lane();
void set_lane(Lane lane);   // test hook; throws if the lane is unavailable
bool avx2_available();

// y[i] += a * x[i]
void axpy(double* y, double a, const double* x, std::size_t n);
// out[i] += c * a[i] * b[i]   (evaluated as (a*b)*c in both lanes)
void madd(double* out, const double* a, const double* b, double c, std::size_t n);
// out[i] = a[i] * b[i]
void mul(double* out, const double* a, const double* b, std::size_t n);
// out[i] = c * in[i]
void scaled_copy(double* out, const double* in, double c, std::size_t n);
// y[i] *= a
void scale(double* y, double a, std::size_t n);

double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double max_abs(const double* x, std::size_t n);
double min_val(const double* x, std::size_t n);
double max_val(const double* x, std::size_t n);

// Reference lane, exposed so the equivalence tests can compare against it directly.
namespace scalar {
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
}  // namespace scalar

}  // namespace exmhd::kernels
