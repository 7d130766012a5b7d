#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Increasing multi-indices over axes {0..n-1}. A degree-k form stores one component per
// increasing k-tuple, enumerated in lexicographic order; every sign rule in the exterior
// operations reduces to insert/remove/merge permutation parities computed here.

namespace exmhd {

inline constexpr int kMaxDim = 6;

int binomial(int n, int k);

struct MultiIndex {
  int k = 0;
  std::array<std::uint8_t, kMaxDim> idx{};  // idx[0] < idx[1] < ... < idx[k-1]

  bool contains(int axis) const {
    for (int i = 0; i < k; ++i)
      if (idx[i] == axis) return true;
    return false;
  }
  bool operator==(const MultiIndex& o) const {
    if (k != o.k) return false;
    for (int i = 0; i < k; ++i)
      if (idx[i] != o.idx[i]) return false;
    return true;
  }
};

// Lexicographic enumeration of increasing k-tuples.
MultiIndex multi_index_at(int n, int k, int rank);
int rank_of(const MultiIndex& mi, int n);
std::vector<MultiIndex> all_multi_indices(int n, int k);

// dx^axis wedge dx^I = sign * dx^K with K increasing; sign = 0 when axis is in I.
struct InsertResult {
  int sign;  // +1, -1, or 0
  MultiIndex index;
};
InsertResult insert_axis(const MultiIndex& mi, int axis);

// Contraction slot: tensor component omega_{axis,I} = sign * omega_K. Same parity as
// insert_axis; kept separate for readability at call sites.
InsertResult remove_axis(const MultiIndex& mi, int axis);  // sign 0 if axis absent

// dx^I wedge dx^J = sign * dx^K, K = sorted union; sign 0 on overlap.
InsertResult merge(const MultiIndex& a, const MultiIndex& b);

// Axes not in mi, increasing.
MultiIndex complement(const MultiIndex& mi, int n);

// Parity of the permutation (I, complement(I)) of (0..n-1): the Hodge star sign.
int split_sign(const MultiIndex& mi, int n);

}  // namespace exmhd
