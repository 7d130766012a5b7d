#pragma once

#include <functional>

#include "exmhd/exterior.hpp"

// Magneto-hydrostatic equilibrium fixtures and their residual check. The equilibrium
// system for a candidate (B, h) at constant density rho0 is
//
//   dh = -(1/rho0) i_J B,   mu0 J = (delta B)^sharp,   dB = 0,
//
// and this module only verifies candidates against it; it does not solve for them.
// Both fixtures are band-limited, so on any admissible grid the residuals are
// spectrally exact and sit at rounding level.

namespace exmhd {

struct MhsCandidate {
  KForm B;        // magnetic 2-form, closed
  ScalarField h;  // specific enthalpy
  double rho0 = 1.0;
  double mu0 = 1.0;
};

struct MhsResidual {
  double force;    // sup|dh + (1/rho0) i_J B| / scale
  double closure;  // sup|dB| / scale
};

// Residuals are relative to the magnetic-pressure gradient scale
// max(sup|B|^2 / (mu0 rho0 min L), 1e-8), so "small" means the same thing at any
// amplitude and box size.
MhsResidual mhs_residual(const MhsCandidate& c);

// The ABC flow v = (a sin x3 + c cos x2, b sin x1 + a cos x3, c sin x2 + b cos x1)
// satisfies curl v = v, so B = i_v dV is a force-free field (i_J B = 0) and h = 0
// closes the system. Requires n = 3, identity metric, all lengths 2 pi.
MhsCandidate beltrami3(const BoxSpec& box, double a, double b, double c);

// Slab pinch on T^2: B = b(x1) dx1^dx2 balanced by h = -|B|^2/(4 mu0 rho0) pointwise,
// which is the pressure-balance primitive of -(1/rho0) i_J B for any profile and any
// constant diagonal metric. The profile is sampled at the grid x1 coordinates, so it
// should be band-limited for the residual to be spectrally exact.
MhsCandidate slab2(const BoxSpec& box, const std::function<double(double)>& profile,
                   double rho0 = 1.0, double mu0 = 1.0);

}  // namespace exmhd
