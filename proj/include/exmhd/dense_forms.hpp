#pragma once

// Brute-force reference implementations for the exterior algebra, used by tests and
// the oracle cross-check command.
// Forms live here as full antisymmetric tensors with n^k entries at a single lattice
// point; every operation is the textbook index formula with explicit permutation sums.
// Nothing in this header touches the library's increasing-index storage or sign
// bookkeeping, so agreement is meaningful.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "exmhd/exterior.hpp"

namespace dense {

// full tensor over k indices, each in [0,n)
struct Tensor {
  int n = 0;
  int k = 0;
  std::vector<double> t;  // size n^k, row-major over the index tuple

  double at(const int* idx) const {
    std::size_t flat = 0;
    for (int s = 0; s < k; ++s) flat = flat * n + idx[s];
    return t[flat];
  }
  double& at(const int* idx) {
    std::size_t flat = 0;
    for (int s = 0; s < k; ++s) flat = flat * n + idx[s];
    return t[flat];
  }
};

inline int perm_sign(const int* idx, int m) {
  int sign = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

// antisymmetric tensor from the library's increasing components at one lattice point
inline Tensor from_form(const exmhd::KForm& f, std::size_t point) {
  const int n = f.box.n;
  const int k = f.degree;
  Tensor T;
  T.n = n;
  T.k = k;
  T.t.assign(static_cast<std::size_t>(std::pow(n, k)), 0.0);
  if (k == 0) {
    T.t[0] = f.comp[0].v[point];
    return T;
  }
  auto incs = exmhd::all_multi_indices(n, k);
  std::array<int, 6> idx{};
  for (std::size_t ci = 0; ci < incs.size(); ++ci) {
    std::array<int, 6> base{};
    for (int s = 0; s < k; ++s) base[s] = incs[ci].idx[s];
    std::array<int, 6> perm;
    std::iota(perm.begin(), perm.begin() + k, 0);
    do {
      for (int s = 0; s < k; ++s) idx[s] = base[perm[s]];
      T.at(idx.data()) = perm_sign(perm.data(), k) * f.comp[ci].v[point];
    } while (std::next_permutation(perm.begin(), perm.begin() + k));
  }
  return T;
}

// component of a wedge b at one increasing index tuple K (length ka+kb):
// (1/(ka! kb!)) sum over permutations sigma of K of sgn(sigma) a[first ka] b[rest]
inline double wedge_at(const Tensor& a, const Tensor& b, const exmhd::MultiIndex& K) {
  const int m = a.k + b.k;
  std::array<int, 6> perm;
  std::iota(perm.begin(), perm.begin() + m, 0);
  std::array<int, 6> ia{}, ib{};
  double acc = 0.0;
  do {
    int sgn = perm_sign(perm.data(), m);
    for (int s = 0; s < a.k; ++s) ia[s] = K.idx[perm[s]];
    for (int s = 0; s < b.k; ++s) ib[s] = K.idx[perm[a.k + s]];
    acc += sgn * a.at(ia.data()) * b.at(ib.data());
  } while (std::next_permutation(perm.begin(), perm.begin() + m));
  double fact = 1.0;
  for (int i = 2; i <= a.k; ++i) fact *= i;
  for (int i = 2; i <= b.k; ++i) fact *= i;
  return acc / fact;
}

// (iota_X omega)_I = sum_j X^j omega_{j I}
inline double interior_at(const std::vector<double>& X, const Tensor& omega,
                          const exmhd::MultiIndex& I) {
  std::array<int, 6> idx{};
  for (int s = 0; s < I.k; ++s) idx[s + 1] = I.idx[s];
  double acc = 0.0;
  for (int j = 0; j < omega.n; ++j) {
    idx[0] = j;
    acc += X[j] * omega.at(idx.data());
  }
  return acc;
}

// (*omega)_J = (sqrt(g)/k!) sum over all k-tuples I of omega_I (prod 1/g_ii) eps_{I,J}
inline double star_at(const Tensor& omega, const exmhd::BoxSpec& box,
                      const exmhd::MultiIndex& J) {
  const int n = omega.n;
  const int k = omega.k;
  std::array<int, 6> eps_idx{};
  for (int s = 0; s < J.k; ++s) eps_idx[k + s] = J.idx[s];
  double acc = 0.0;
  std::array<int, 6> I{};
  const std::size_t tuples = static_cast<std::size_t>(std::pow(n, k));
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    for (int s = k - 1; s >= 0; --s) {
      I[s] = static_cast<int>(rest % n);
      rest /= n;
    }
    double raised = omega.at(I.data());
    if (raised == 0.0) continue;
    for (int s = 0; s < k; ++s) raised /= box.metric[I[s]];
    for (int s = 0; s < k; ++s) eps_idx[s] = I[s];
    acc += raised * perm_sign(eps_idx.data(), n);
  }
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return acc * box.sqrt_g() / fact;
}

// full contraction omega_I omega^I over all index tuples
inline double norm2_at(const Tensor& omega, const exmhd::BoxSpec& box) {
  const int n = omega.n;
  const int k = omega.k;
  std::array<int, 6> I{};
  double acc = 0.0;
  const std::size_t tuples = static_cast<std::size_t>(std::pow(n, k));
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    for (int s = k - 1; s >= 0; --s) {
      I[s] = static_cast<int>(rest % n);
      rest /= n;
    }
    double v = omega.at(I.data());
    if (v == 0.0) continue;
    double raised = v;
    for (int s = 0; s < k; ++s) raised /= box.metric[I[s]];
    acc += v * raised;
  }
  return acc;
}

}  // namespace dense
