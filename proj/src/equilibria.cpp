#include "exmhd/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exmhd/mhd.hpp"

namespace exmhd {

namespace {

KForm as_zero_form(const ScalarField& f) {
  KForm w = make_kform(f.box, 0);
  w.comp[0] = f;
  return w;
}

}  // namespace

MhsResidual mhs_residual(const MhsCandidate& c) {
  const BoxSpec& box = c.B.box;
  if (c.B.degree != 2) throw std::invalid_argument("mhs_residual: B must be a 2-form");
  if (!(c.rho0 > 0.0) || !(c.mu0 > 0.0))
    throw std::invalid_argument("mhs_residual: rho0 and mu0 must be positive");
  if (c.h.box != box) throw std::invalid_argument("mhs_residual: h lives on a different box");

  double min_len = box.lengths[0];
  for (int a = 1; a < box.n; ++a) min_len = std::min(min_len, box.lengths[a]);
  double bsup = sup_norm(c.B);
  double scale = std::max(bsup * bsup / (c.mu0 * c.rho0 * min_len), 1e-8);

  VecField J = current(c.B, c.mu0);
  KForm force = d(as_zero_form(c.h));
  add_scaled_form(force, 1.0 / c.rho0, interior(J, c.B, Dealias::off));

  // a top-degree B (n=2 slab) is closed by construction, and d would reject it
  double closure = c.B.degree == box.n ? 0.0 : sup_norm(d(c.B)) / scale;
  return {sup_norm(force) / scale, closure};
}

MhsCandidate beltrami3(const BoxSpec& box, double a, double b, double c) {
  if (box.n != 3) throw std::invalid_argument("beltrami3: requires a 3d box");
  double tau = 8.0 * std::atan(1.0);
  for (int ax = 0; ax < 3; ++ax) {
    if (box.metric[ax] != 1.0)
      throw std::invalid_argument("beltrami3: requires the identity metric");
    if (std::abs(box.lengths[ax] - tau) > 1e-12)
      throw std::invalid_argument("beltrami3: requires all lengths 2*pi");
  }

  VecField v = make_vecfield(box);
  int coord[kMaxDim];
  for (std::size_t i = 0; i < box.point_count(); ++i) {
    point_coords(box, i, coord);
    double x1 = box.coordinate(0, coord[0]);
    double x2 = box.coordinate(1, coord[1]);
    double x3 = box.coordinate(2, coord[2]);
    v.comp[0].v[i] = a * std::sin(x3) + c * std::cos(x2);
    v.comp[1].v[i] = b * std::sin(x1) + a * std::cos(x3);
    v.comp[2].v[i] = c * std::sin(x2) + b * std::cos(x1);
  }

  MhsCandidate out;
  out.B = interior(v, make_kform(box, 3, 1.0), Dealias::off);
  out.h = make_field(box);
  return out;
}

MhsCandidate slab2(const BoxSpec& box, const std::function<double(double)>& profile,
                   double rho0, double mu0) {
  if (box.n != 2) throw std::invalid_argument("slab2: requires a 2d box");
  if (!(rho0 > 0.0) || !(mu0 > 0.0))
    throw std::invalid_argument("slab2: rho0 and mu0 must be positive");

  MhsCandidate out;
  out.rho0 = rho0;
  out.mu0 = mu0;
  out.B = make_kform(box, 2);
  int coord[kMaxDim];
  for (std::size_t i = 0; i < box.point_count(); ++i) {
    point_coords(box, i, coord);
    out.B.comp[0].v[i] = profile(box.coordinate(0, coord[0]));
  }
  out.h = norm2(out.B);
  scale_field(out.h, -1.0 / (4.0 * mu0 * rho0));
  return out;
}

}  // namespace exmhd
