#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "exmhd/exterior.hpp"

// Self-contained verification suites, shared by the command line tool and the
// acceptance tests. Each check is one named residual with its tolerance, so callers
// can print a line per identity and turn the worst offender into an exit code.

namespace exmhd {

struct CheckLine {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass() const { return residual <= tol; }
};

// Replacement Hodge star, used by the test harness to inject a deliberate bug and
// confirm the suite catches it. Empty means the library star.
using StarFn = std::function<KForm(const KForm&)>;

// Calculus identities on random band-limited fields, identity metric and diag(4,1,..)
// both: d(d a) = 0, the ** sign, graded anticommutativity of the wedge, the Leibniz
// rule, i_X i_X = 0, and <da,b> = <a,delta b>. All residuals checked against 1e-10.
std::vector<CheckLine> identity_suite(int n, int npts = 16, const StarFn& star_impl = {});

// Pointwise agreement of wedge / interior / star / norm2 with the dense antisymmetric
// tensor formulas at `points` random lattice points per degree, tolerance 1e-12.
std::vector<CheckLine> oracle_suite(int n, int points = 100, std::uint64_t seed = 9001);

bool all_pass(const std::vector<CheckLine>& lines);

}  // namespace exmhd
