#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "exmhd/exterior.hpp"
#include "exmhd/mhd.hpp"

// Bit-exact binary persistence for forms and full states.
//
// Layout (all integers and doubles little-endian, regardless of host):
//   magic "NFRM1\0" | u8 n | u8 degree (0xFF = full state) | u8 flags |
//   u32 dims[n] | f64 lengths[n] | f64 metric[n] | f64 t |
//   components, lexicographic multi-index order, each prod(dims) doubles in the
//   lattice's row-major point order. A full state stores rho, the n components of u,
//   then the n components of A.
//
// write -> read -> write reproduces the file byte for byte.

namespace exmhd {

struct SnapshotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Snapshot {
  double t = 0.0;
  std::optional<KForm> form;     // set when the file held a single k-form
  std::optional<MhdState> state; // set when the file held a full state
};

void write_snapshot(const std::string& path, const KForm& form, double t);
void write_snapshot(const std::string& path, const MhdState& state);

// Throws SnapshotError on a bad magic, malformed header, or truncated payload.
Snapshot read_snapshot(const std::string& path);

}  // namespace exmhd
