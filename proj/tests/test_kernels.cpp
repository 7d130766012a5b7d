#include <cstdint>
#include <vector>

#include "doctest.h"
#include "exmhd/kernels.hpp"

// The scalar lane is the reference; the AVX2 lane must agree bitwise for elementwise
// kernels (same operation order, no contraction) and to 1e-13 relative for reductions
// (fixed four-lane partial sums reassociate the additions).

namespace {

// deterministic xorshift-based fill, no libc rand
std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  std::uint64_t s = seed * 2685821657736338717ULL + 1;
  for (auto& x : v) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    x = static_cast<double>(s >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
  return v;
}

const std::size_t kSizes[] = {1, 3, 4, 7, 8, 31, 64, 1000, 4097};

}  // namespace

TEST_CASE("avx2 elementwise kernels match scalar lane bitwise") {
  using namespace exmhd::kernels;
  if (!avx2_available()) {
    MESSAGE("no avx2 on this cpu, lane equivalence not exercised");
    return;
  }
  for (std::size_t n : kSizes) {
    auto a = random_values(n, 11 + n);
    auto b = random_values(n, 23 + n);
    auto y0 = random_values(n, 37 + n);

    auto ys = y0, yv = y0;
    scalar::madd(ys.data(), a.data(), b.data(), -0.75, n);
    set_lane(Lane::avx2);
    madd(yv.data(), a.data(), b.data(), -0.75, n);
    CHECK(ys == yv);

    ys = y0;
    yv = y0;
    scalar::axpy(ys.data(), 1.375, a.data(), n);
    axpy(yv.data(), 1.375, a.data(), n);
    CHECK(ys == yv);

    ys = y0;
    yv = y0;
    scalar::mul(ys.data(), a.data(), b.data(), n);
    mul(yv.data(), a.data(), b.data(), n);
    CHECK(ys == yv);

    ys = y0;
    yv = y0;
    scalar::scaled_copy(ys.data(), a.data(), 0.311, n);
    scaled_copy(yv.data(), a.data(), 0.311, n);
    CHECK(ys == yv);

    ys = y0;
    yv = y0;
    scalar::scale(ys.data(), -3.2, n);
    scale(yv.data(), -3.2, n);
    CHECK(ys == yv);
  }
  set_lane(avx2_available() ? Lane::avx2 : Lane::scalar);
}

TEST_CASE("avx2 reductions match scalar lane to 1e-13") {
  using namespace exmhd::kernels;
  if (!avx2_available()) {
    MESSAGE("no avx2 on this cpu, lane equivalence not exercised");
    return;
  }
  set_lane(Lane::avx2);
  for (std::size_t n : kSizes) {
    auto a = random_values(n, 5 + n);
    auto b = random_values(n, 7 + n);

    double mag = 0.0;
    for (double x : a) mag += x > 0 ? x : -x;

    CHECK(std::abs(sum(a.data(), n) - scalar::sum(a.data(), n)) <= 1e-13 * (mag + 1.0));
    CHECK(std::abs(dot(a.data(), b.data(), n) - scalar::dot(a.data(), b.data(), n)) <=
          1e-13 * (mag + 1.0));
    // order-independent reductions must agree exactly
    CHECK(max_abs(a.data(), n) == scalar::max_abs(a.data(), n));
    CHECK(min_val(a.data(), n) == scalar::min_val(a.data(), n));
    CHECK(max_val(a.data(), n) == scalar::max_val(a.data(), n));
  }
}

TEST_CASE("lane can be forced to scalar and restored") {
  using namespace exmhd::kernels;
  Lane before = active_lane();
  set_lane(Lane::scalar);
  CHECK(active_lane() == Lane::scalar);
  double x[3] = {1.0, 2.0, 3.0};
  CHECK(sum(x, 3) == 6.0);
  set_lane(before);
}
