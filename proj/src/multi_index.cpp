#include "exmhd/multi_index.hpp"

#include <stdexcept>

namespace exmhd {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

MultiIndex multi_index_at(int n, int k, int rank) {
  if (k < 0 || k > n || rank < 0 || rank >= binomial(n, k))
    throw std::out_of_range("multi_index_at: bad degree or rank");
  MultiIndex mi;
  mi.k = k;
  // peel off the leading axis: tuples starting with a fixed axis a form a
  // contiguous lexicographic block of size C(n-1-a, k-1)
  int axis = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (;; ++axis) {
      int block = binomial(n - 1 - axis, k - 1 - slot);
      if (rank < block) break;
      rank -= block;
    }
    mi.idx[slot] = static_cast<std::uint8_t>(axis++);
  }
  return mi;
}

int rank_of(const MultiIndex& mi, int n) {
  int rank = 0;
  int prev = -1;
  for (int slot = 0; slot < mi.k; ++slot) {
    for (int axis = prev + 1; axis < mi.idx[slot]; ++axis)
      rank += binomial(n - 1 - axis, mi.k - 1 - slot);
    prev = mi.idx[slot];
  }
  return rank;
}

std::vector<MultiIndex> all_multi_indices(int n, int k) {
  std::vector<MultiIndex> out;
  int count = binomial(n, k);
  out.reserve(count);
  for (int r = 0; r < count; ++r) out.push_back(multi_index_at(n, k, r));
  return out;
}

InsertResult insert_axis(const MultiIndex& mi, int axis) {
  MultiIndex out;
  out.k = mi.k + 1;
  int pos = 0;
  while (pos < mi.k && mi.idx[pos] < axis) ++pos;
  if (pos < mi.k && mi.idx[pos] == axis) return {0, {}};
  for (int i = 0; i < pos; ++i) out.idx[i] = mi.idx[i];
  out.idx[pos] = static_cast<std::uint8_t>(axis);
  for (int i = pos; i < mi.k; ++i) out.idx[i + 1] = mi.idx[i];
  return {(pos % 2 == 0) ? 1 : -1, out};
}

InsertResult remove_axis(const MultiIndex& mi, int axis) {
  MultiIndex out;
  out.k = mi.k - 1;
  int pos = -1;
  for (int i = 0; i < mi.k; ++i)
    if (mi.idx[i] == axis) pos = i;
  if (pos < 0) return {0, {}};
  for (int i = 0, j = 0; i < mi.k; ++i)
    if (i != pos) out.idx[j++] = mi.idx[i];
  return {(pos % 2 == 0) ? 1 : -1, out};
}

InsertResult merge(const MultiIndex& a, const MultiIndex& b) {
  // merge-sort the two increasing tuples, counting transpositions
  MultiIndex out;
  out.k = a.k + b.k;
  int ia = 0, ib = 0, slot = 0;
  int inversions = 0;
  while (ia < a.k && ib < b.k) {
    if (a.idx[ia] == b.idx[ib]) return {0, {}};
    if (a.idx[ia] < b.idx[ib]) {
      out.idx[slot++] = a.idx[ia++];
    } else {
      // b.idx[ib] jumps over the a.k - ia remaining a-entries
      inversions += a.k - ia;
      out.idx[slot++] = b.idx[ib++];
    }
  }
  while (ia < a.k) out.idx[slot++] = a.idx[ia++];
  while (ib < b.k) out.idx[slot++] = b.idx[ib++];
  return {(inversions % 2 == 0) ? 1 : -1, out};
}

MultiIndex complement(const MultiIndex& mi, int n) {
  MultiIndex out;
  out.k = n - mi.k;
  int slot = 0;
  for (int axis = 0; axis < n; ++axis)
    if (!mi.contains(axis)) out.idx[slot++] = static_cast<std::uint8_t>(axis);
  return out;
}

int split_sign(const MultiIndex& mi, int n) {
  auto m = merge(mi, complement(mi, n));
  return m.sign;
}

}  // namespace exmhd
