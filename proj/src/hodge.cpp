#include "exmhd/hodge.hpp"

#include <cmath>
#include <stdexcept>

#include "exmhd/spectral.hpp"
#include "exmhd/threading.hpp"

namespace exmhd {

namespace {

// multiplier of the coordinate Laplacian at one mode, with spectral_partial's
// convention (Nyquist rows carry no first derivative, hence no eigenvalue here)
double laplace_multiplier(const BoxSpec& box, const int* k) {
  double lam = 0.0;
  for (int a = 0; a < box.n; ++a) {
    if (k[a] == box.dims[a] / 2) continue;
    double kw = box.wavenumber(a, k[a]);
    lam += kw * kw / box.metric[a];
  }
  return lam;
}

// f divided by the Laplacian eigenvalue mode by mode; zero-multiplier content dropped
ScalarField inverse_laplacian(const ScalarField& f) {
  auto spec = fft_forward(f);
  for_each_mode(f.box, [&](std::size_t flat, const int* k) {
    double lam = laplace_multiplier(f.box, k);
    if (lam == 0.0)
      spec[flat] = 0.0;
    else
      spec[flat] /= -lam;
  });
  return fft_backward(f.box, std::move(spec));
}

KForm inverse_laplacian_form(const KForm& omega) {
  KForm out = make_kform(omega.box, omega.degree);
  parallel_for(omega.comp.size(), [&](std::size_t ci) {
    out.comp[ci] = inverse_laplacian(omega.comp[ci]);
  });
  return out;
}

}  // namespace

ScalarField poisson(const ScalarField& f) {
  double sup = max_abs(f);
  if (std::fabs(mean(f)) > 1e-10 * sup)
    throw std::invalid_argument("poisson: nonzero mean, no periodic solution");
  return inverse_laplacian(f);
}

HodgeParts hodge_decompose(const KForm& omega) {
  const int n = omega.box.n;
  const int k = omega.degree;
  if (k <= 0 || k >= n)
    throw std::invalid_argument("hodge_decompose: degree must satisfy 0 < k < n");

  // eta solves (d delta + delta d) eta = omega - harmonic, componentwise spectrally;
  // applying the two halves of the Laplacian splits off exact and coexact parts, and
  // the remainder is the zero-multiplier (harmonic) content.
  KForm eta = inverse_laplacian_form(omega);
  scale_form(eta, -1.0);  // d delta + delta d = -(coordinate Laplacian) on flat boxes

  HodgeParts parts{d(codifferential(eta)), codifferential(d(eta)),
                   make_kform(omega.box, k)};
  parts.harmonic = omega;
  add_scaled_form(parts.harmonic, -1.0, parts.exact);
  add_scaled_form(parts.harmonic, -1.0, parts.coexact);
  return parts;
}

std::vector<KForm> harmonic_basis(const BoxSpec& box, int k) {
  std::vector<KForm> basis;
  auto incs = all_multi_indices(box.n, k);
  double coord_vol = 1.0;
  for (int a = 0; a < box.n; ++a) coord_vol *= box.lengths[a];
  for (const auto& I : incs) {
    double ip = box.sqrt_g() * coord_vol;
    for (int s = 0; s < I.k; ++s) ip /= box.metric[I.idx[s]];
    KForm gamma = make_kform(box, k);
    gamma.comp[rank_of(I, box.n)] = make_field(box, 1.0 / std::sqrt(ip));
    basis.push_back(std::move(gamma));
  }
  return basis;
}

PotentialParts vector_potential(const KForm& B) {
  if (B.degree != 2) throw std::invalid_argument("vector_potential: expects a 2-form");
  double supB = sup_norm(B);
  // top-degree input (n = 2) is closed automatically
  if (B.box.n > 2 && supB > 0.0 && sup_norm(d(B)) > 1e-9 * supB)
    throw std::invalid_argument("vector_potential: input 2-form is not closed");

  KForm eta = inverse_laplacian_form(B);
  scale_form(eta, -1.0);
  PotentialParts out{codifferential(eta), make_kform(B.box, 2)};
  for (std::size_t ci = 0; ci < B.comp.size(); ++ci) {
    double m = mean(B.comp[ci]);
    out.xi.comp[ci] = make_field(B.box, m);
  }
  return out;
}

KForm leray_project(const KForm& u) {
  if (u.degree != 1) throw std::invalid_argument("leray_project: expects a 1-form");
  KForm eta = inverse_laplacian_form(u);
  scale_form(eta, -1.0);
  KForm out = u;
  add_scaled_form(out, -1.0, d(codifferential(eta)));
  return out;
}

}  // namespace exmhd
