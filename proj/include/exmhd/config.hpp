#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "exmhd/lattice.hpp"
#include "exmhd/mhd.hpp"

// JSON run configuration. Parsing is strict: unknown keys anywhere in the document
// are rejected, and every violation names the offending field, so a typo cannot
// silently change the physics of a run.

namespace exmhd {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimConfig {
  BoxSpec box;
  Closure closure;
  bool euler = false;            // drop the magnetic field entirely
  bool incompressible = false;   // project the seeded velocity (implied by the closure)
  int symmetric_axis = -1;       // -1 means no imposed symmetry
  std::uint64_t seed = 1;
  InitialOptions initial;        // amplitude block; symmetry/euler flags mirrored in
  double dt = 1e-3;
  double t_end = 0.0;
  int report_every = 1;
  int snapshot_every = 0;        // 0 disables snapshots
  std::string invariants_csv = "invariants.csv";
  std::string snapshot_prefix = "snapshot";
};

// Parses and validates; throws ConfigError with a "field: problem" message.
SimConfig parse_config(const std::string& json_text);
SimConfig load_config(const std::string& path);

}  // namespace exmhd
