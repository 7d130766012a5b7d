#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exmhd/mhd.hpp"

// Conserved functionals of the flow and their evaluation into reports. Two kinds of
// integral appear and must not be mixed up: metric integrals (mass, energy, momentum)
// carry the sqrt(g) volume weight, while helicity-type integrals of an n-form read off
// the raw dx^1...dx^n coefficient. Casimir families take a battery of scalar test
// functions; the default battery is {id, square, cube, cos}.

namespace exmhd {

struct TestFunction {
  std::string name;
  std::function<double(double)> f;
};
using TestFunctionBattery = std::vector<TestFunction>;

TestFunctionBattery default_battery();

// integral of rho over the box
double total_mass(const MhdState& s);

// integral of (|u#|^2/2 + U(rho) + |B|^2/(4 mu0 rho)) rho, with |B|^2 = B_ij B^ij
double total_energy(const MhdState& s, const Closure& cl);

// P^i = integral of u^i rho for each axis
std::vector<double> total_momentum(const MhdState& s);

// integral of alpha ^ beta^m on an odd-dimensional box, n = 2m+1. Covers cross
// helicity (alpha=u, beta=B), magnetic helicity (alpha=A, beta=B) and fluid helicity
// (alpha=u, beta=du). beta must be closed to about 1e-9 of its size.
double odd_helicity(const KForm& alpha, const KForm& beta, int m);

// integral of f(beta^m / nu) nu on an even-dimensional box, n = 2m, nu = rho dV:
// pointwise q = (beta^m coefficient)/(rho sqrt(g)), result integral of f(q) rho.
// Covers the magnetic casimirs (beta=B) and the enstrophy family (beta=du).
double even_casimir(const KForm& beta, const ScalarField& rho,
                    const std::function<double(double)>& f);

// integral of f(s) rho over the lattice slice at index slice_index of `axis`, with the
// slice volume weight. s and rho live on the full box and must not vary along `axis`
// (residual above 1e-6 of the field size is an error). Covers the mean-square
// potential family (s = A_axis) and the swirl family (s = u_axis).
double symmetric_casimir(const ScalarField& s, const ScalarField& rho, int axis,
                         const std::function<double(double)>& f, int slice_index = 0);

// r_j = integral of gamma_j ^ B^m against the normalized harmonic 1-forms; every r_j
// vanishes for exact B.
std::vector<double> orthogonality(const KForm& B, int m);

struct InvariantReport {
  double t = 0.0;
  double N = 0.0;
  double H = 0.0;
  std::vector<double> P;

  // odd-dimensional boxes
  std::optional<double> C;   // cross helicity (magnetic runs)
  std::optional<double> M;   // magnetic helicity (magnetic runs)
  std::optional<double> Hf;  // fluid helicity
  std::vector<double> ortho;

  // even-dimensional boxes, one value per battery member
  std::vector<std::pair<std::string, double>> W;  // magnetic casimirs
  std::vector<std::pair<std::string, double>> E;  // enstrophy family

  // symmetric runs
  std::vector<std::pair<std::string, double>> Pms;  // f(A_axis) family (magnetic)
  std::vector<std::pair<std::string, double>> Q;    // f(u_axis) family

  double u_max = 0.0;
  double B_max = 0.0;
  double rho_min = 0.0;
};

struct ReportFlags {
  bool magnetic = true;
  int symmetric_axis = -1;
};

// Evaluates exactly the functionals that apply to the box parity, the magnetic flag
// and the symmetry flag, leaving the rest empty.
InvariantReport report(const MhdState& s, const Closure& cl,
                       const TestFunctionBattery& battery, const ReportFlags& flags);

}  // namespace exmhd
