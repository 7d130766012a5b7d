#pragma once

#include <vector>

#include "exmhd/lattice.hpp"
#include "exmhd/multi_index.hpp"

// Exterior algebra and calculus for forms on the flat periodic box. A degree-k form
// keeps one ScalarField per strictly increasing multi-index, lexicographic order; all
// permutation signs come from multi_index.hpp. The metric is constant and diagonal, so
// musical isomorphisms and the Hodge star are pointwise rescalings.
//
// Nonlinear pointwise products (wedge, interior, Lie) accept a dealias flag: ON inside
// dynamics right-hand sides to suppress quadratic aliasing, OFF for pure algebra.

namespace exmhd {

enum class Dealias { off, on };

struct KForm {
  BoxSpec box;
  int degree = 0;
  std::vector<ScalarField> comp;  // size C(n, degree)

  const ScalarField& operator[](int i) const { return comp[i]; }
  ScalarField& operator[](int i) { return comp[i]; }
};

struct VecField {
  BoxSpec box;
  std::vector<ScalarField> comp;  // n contravariant components
};

KForm make_kform(const BoxSpec& box, int degree, double fill = 0.0);
VecField make_vecfield(const BoxSpec& box, double fill = 0.0);

KForm wedge(const KForm& a, const KForm& b, Dealias da = Dealias::off);
KForm wedge_power(const KForm& beta, int m, Dealias da = Dealias::off);
KForm d(const KForm& omega);
KForm interior(const VecField& X, const KForm& omega, Dealias da = Dealias::off);
KForm star(const KForm& omega);
KForm codifferential(const KForm& omega);
KForm lie(const VecField& X, const KForm& omega, Dealias da = Dealias::off);

VecField sharp(const KForm& u);
KForm flat(const VecField& X);

// |omega|^2 with the full-tensor contraction convention: a factor k! on top of the sum
// over increasing components (for a 2-form this is B_ij B^ij, twice the component sum).
ScalarField norm2(const KForm& omega);

// L² inner product <a,b> = integral of a wedge *b.
double inner(const KForm& a, const KForm& b);
// Integral of a top-degree form: plain coefficient sum times dV, no sqrt(g).
double form_integral(const KForm& omega);
// max over the lattice of |omega| (pointwise metric norm).
double sup_norm(const KForm& omega);

// Linear combinations across all components.
void add_scaled_form(KForm& y, double a, const KForm& x);
void scale_form(KForm& y, double a);
KForm dealias_form(const KForm& omega);

}  // namespace exmhd
