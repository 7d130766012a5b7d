#pragma once

#include <cstdint>
#include <functional>

#include "exmhd/exterior.hpp"
#include "exmhd/hodge.hpp"

// Ideal MHD on the flat periodic box, written in forms: mass density rho, velocity
// 1-form u, magnetic potential 1-form A in Weyl gauge (scalar potential fixed to 0).
// The magnetic 2-form is always the derived quantity B = dA, so dB = 0 holds to
// rounding for the whole evolution. Setting A = 0 reduces the system to barotropic
// Euler flow. Time stepping is classical fourth-order Runge-Kutta.

namespace exmhd {

struct MhdState {
  double t = 0.0;
  ScalarField rho;
  KForm u;
  KForm A;
};

enum class ClosureKind { incompressible, isothermal, polytropic };

// Barotropic closure. The specific enthalpy primitive h(rho) drives the pressure
// gradient; U(rho) is the matching specific internal energy with (rho U)' = h:
//   isothermal  h = c^2 ln(rho)                U = c^2 (ln(rho) - 1)
//   polytropic  h = K g/(g-1) rho^(g-1)        U = K/(g-1) rho^(g-1)
//   incompressible: rho is pinned to rho0, pressure comes from the projection, U = 0.
struct Closure {
  ClosureKind kind = ClosureKind::isothermal;
  double rho0 = 1.0;
  double c = 1.0;
  double K = 1.0;
  double gamma = 5.0 / 3.0;
  double mu0 = 1.0;
};

Closure incompressible_closure(double rho0, double mu0 = 1.0);
Closure isothermal_closure(double c, double mu0 = 1.0);
Closure polytropic_closure(double K, double gamma, double mu0 = 1.0);

ScalarField enthalpy(const Closure& cl, const ScalarField& rho);
ScalarField internal_energy(const Closure& cl, const ScalarField& rho);
double sound_speed_max(const Closure& cl, const ScalarField& rho);

// B = dA; closed to rounding by construction.
KForm induced_B(const MhdState& s);
// J = sharp(delta B) / mu0.
VecField current(const KForm& B, double mu0);

struct MhdRhs {
  ScalarField rho_dot;
  KForm u_dot;
  KForm A_dot;
};

// Evolution right-hand side with every quadratic product dealiased:
//   rho_dot = -sum_a d_a(rho u^a)   (zero for the incompressible closure)
//   u_dot   = -i_{u#}du - d(|u#|^2/2) - d h(rho) - (1/rho) i_J B
//             (incompressible: Leray projection of advective + Lorentz terms; the
//              projection keeps the harmonic velocity part, so momentum survives)
//   A_dot   = -i_{u#} dA
// Throws std::runtime_error when rho is not strictly positive.
MhdRhs rhs(const MhdState& s, const Closure& cl);

// 0.4 * min_a(sqrt(g_aa) dx_a) / (max|u| + c_sound + v_alfven), speeds measured with
// the metric; infinity for a static state.
double cfl_limit(const MhdState& s, const Closure& cl);

// One classical RK4 step. Warns on stderr when dt exceeds cfl_limit; throws
// std::runtime_error if the updated state contains a non-finite value.
MhdState rk4_step(const MhdState& s, const Closure& cl, double dt);

struct InitialOptions {
  double rho_mean = 1.0;
  double rho_eps = 0.1;     // relative density fluctuation amplitude, at most 0.2
  double u_amp = 0.3;
  double a_amp = 0.3;
  int band = 0;             // spectral width; 0 means the N_a/4 default, larger is capped
  int symmetric_axis = -1;  // >= 0: fields carry no dependence on that coordinate
  bool euler_only = false;  // leave A identically zero
  bool incompressible = false;  // Leray-project u even for compressible closures
};

// Reproducible band-limited random state: every field keeps only modes with
// |k_a| <= N_a/4. Same box, closure, seed and options give a bit-identical state.
MhdState make_initial(const BoxSpec& box, const Closure& cl, std::uint64_t seed,
                      const InitialOptions& opt = {});

struct RunControl {
  double dt = 1e-3;
  double t_end = 0.0;
  int report_every = 1;
  // Called with the state and step index: always at step 0, then every
  // report_every-th step, and always at the final step.
  std::function<void(const MhdState&, long)> on_report;
};

// Fixed-step drive to t_end (the last step is shortened to land exactly).
MhdState run(MhdState state, const Closure& cl, const RunControl& ctl);

}  // namespace exmhd
