#pragma once

#include <vector>

#include "exmhd/exterior.hpp"

// Hodge machinery on the closed flat torus. On T^n with a constant diagonal metric the
// Hodge Laplacian acts componentwise as the coordinate Laplacian, so every split here is
// a Fourier-multiplier solve: zero-multiplier modes are the discrete harmonic space
// (the constants, plus pure-Nyquist lattice modes that both d and delta annihilate;
// band-limited fields never populate the latter), and the exact/coexact parts come from
// d delta / delta d applied to the inverse-Laplacian preimage.

namespace exmhd {

struct HodgeParts {
  KForm exact;     // d alpha
  KForm coexact;   // delta beta
  KForm harmonic;  // constant components for band-limited input
};

// Inverts the coordinate Laplacian sum_i g^ii d_i^2 on mean-zero scalars (the spectral
// multiplier uses the same Nyquist-zeroed wavenumbers as spectral_partial).
ScalarField poisson(const ScalarField& f);

HodgeParts hodge_decompose(const KForm& omega);

// The C(n,k) constant forms dx^I, L2-normalized, lexicographic order.
std::vector<KForm> harmonic_basis(const BoxSpec& box, int k);

struct PotentialParts {
  KForm A;   // 1-form, Coulomb gauge (delta A = 0)
  KForm xi;  // harmonic 2-form (constant components)
};
// Requires B closed: sup|dB| <= 1e-9 * sup|B|.
PotentialParts vector_potential(const KForm& B);

// Removes the exact part of a 1-form; harmonic (constant) part is retained.
KForm leray_project(const KForm& u);

}  // namespace exmhd
