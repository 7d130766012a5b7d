#include "exmhd/invariants.hpp"

#include <cmath>
#include <stdexcept>

#include "exmhd/hodge.hpp"

namespace exmhd {

TestFunctionBattery default_battery() {
  return {{"id", [](double t) { return t; }},
          {"square", [](double t) { return t * t; }},
          {"cube", [](double t) { return t * t * t; }},
          {"cos", [](double t) { return std::cos(t); }}};
}

double total_mass(const MhdState& s) { return integrate(s.rho); }

double total_energy(const MhdState& s, const Closure& cl) {
  const BoxSpec& box = s.rho.box;
  ScalarField e = make_field(box);
  ScalarField ku = norm2(s.u);
  ScalarField U = internal_energy(cl, s.rho);
  for (std::size_t i = 0; i < e.v.size(); ++i)
    e.v[i] = s.rho.v[i] * (0.5 * ku.v[i] + U.v[i]);
  KForm B = induced_B(s);
  ScalarField kb = norm2(B);
  add_scaled(e, 1.0 / (4.0 * cl.mu0), kb);
  return integrate(e);
}

std::vector<double> total_momentum(const MhdState& s) {
  const BoxSpec& box = s.rho.box;
  std::vector<double> P(box.n);
  for (int a = 0; a < box.n; ++a) {
    ScalarField m = product(s.rho, s.u.comp[a]);
    scale_field(m, 1.0 / box.metric[a]);
    P[a] = integrate(m);
  }
  return P;
}

double odd_helicity(const KForm& alpha, const KForm& beta, int m) {
  const BoxSpec& box = alpha.box;
  if (box.n != 2 * m + 1)
    throw std::invalid_argument("odd_helicity: box dimension must equal 2m+1");
  if (alpha.degree != 1 || beta.degree != 2)
    throw std::invalid_argument("odd_helicity: needs a 1-form and a 2-form");
  double scale = sup_norm(beta);
  if (sup_norm(d(beta)) > 1e-9 * std::max(1.0, scale))
    throw std::invalid_argument("odd_helicity: beta is not closed");
  return form_integral(wedge(alpha, wedge_power(beta, m)));
}

double even_casimir(const KForm& beta, const ScalarField& rho,
                    const std::function<double(double)>& f) {
  const BoxSpec& box = beta.box;
  if (box.n % 2 != 0)
    throw std::invalid_argument("even_casimir: box dimension must be even");
  if (beta.degree != 2) throw std::invalid_argument("even_casimir: needs a 2-form");
  if (!(kernels::min_val(rho.v.data(), rho.v.size()) > 0.0))
    throw std::invalid_argument("even_casimir: rho must be positive");

  KForm top = wedge_power(beta, box.n / 2);
  const double sg = box.sqrt_g();
  ScalarField integrand = make_field(box);
  for (std::size_t i = 0; i < integrand.v.size(); ++i) {
    double q = top.comp[0].v[i] / (rho.v[i] * sg);
    integrand.v[i] = f(q) * rho.v[i];
  }
  return integrate(integrand);
}

double symmetric_casimir(const ScalarField& s, const ScalarField& rho, int axis,
                         const std::function<double(double)>& f, int slice_index) {
  const BoxSpec& box = s.box;
  if (axis < 0 || axis >= box.n)
    throw std::invalid_argument("symmetric_casimir: axis out of range");
  if (slice_index < 0 || slice_index >= box.dims[axis])
    throw std::invalid_argument("symmetric_casimir: slice index out of range");
  for (const ScalarField* fld : {&s, &rho}) {
    double residual = max_abs(spectral_partial(*fld, axis));
    if (residual > 1e-6 * std::max(1.0, max_abs(*fld)))
      throw std::invalid_argument("symmetric_casimir: fields vary along the axis");
  }

  // slice volume element: drop the axis factor from both dV and sqrt(g)
  const double w =
      box.cell_volume() / box.spacing(axis) * box.sqrt_g() / std::sqrt(box.metric[axis]);
  double acc = 0.0;
  int c[kMaxDim];
  for (std::size_t p = 0; p < s.v.size(); ++p) {
    point_coords(box, p, c);
    if (c[axis] != slice_index) continue;
    acc += f(s.v[p]) * rho.v[p] * w;
  }
  return acc;
}

std::vector<double> orthogonality(const KForm& B, int m) {
  const BoxSpec& box = B.box;
  if (box.n != 2 * m + 1)
    throw std::invalid_argument("orthogonality: box dimension must equal 2m+1");
  if (B.degree != 2) throw std::invalid_argument("orthogonality: needs a 2-form");
  KForm Bm = wedge_power(B, m);
  std::vector<double> r;
  for (const KForm& gamma : harmonic_basis(box, 1))
    r.push_back(form_integral(wedge(gamma, Bm)));
  return r;
}

InvariantReport report(const MhdState& s, const Closure& cl,
                       const TestFunctionBattery& battery, const ReportFlags& flags) {
  const BoxSpec& box = s.rho.box;
  InvariantReport rep;
  rep.t = s.t;
  rep.N = total_mass(s);
  rep.H = total_energy(s, cl);
  rep.P = total_momentum(s);

  KForm B = induced_B(s);
  KForm w = d(s.u);

  if (box.n % 2 == 1) {
    const int m = (box.n - 1) / 2;
    rep.Hf = odd_helicity(s.u, w, m);
    if (flags.magnetic) {
      rep.C = odd_helicity(s.u, B, m);
      rep.M = odd_helicity(s.A, B, m);
      rep.ortho = orthogonality(B, m);
    }
  } else {
    for (const auto& tf : battery) {
      rep.E.emplace_back(tf.name, even_casimir(w, s.rho, tf.f));
      if (flags.magnetic) rep.W.emplace_back(tf.name, even_casimir(B, s.rho, tf.f));
    }
  }

  if (flags.symmetric_axis >= 0) {
    const int ax = flags.symmetric_axis;
    for (const auto& tf : battery) {
      rep.Q.emplace_back(tf.name, symmetric_casimir(s.u.comp[ax], s.rho, ax, tf.f));
      if (flags.magnetic)
        rep.Pms.emplace_back(tf.name, symmetric_casimir(s.A.comp[ax], s.rho, ax, tf.f));
    }
  }

  rep.u_max = sup_norm(s.u);
  rep.B_max = flags.magnetic ? sup_norm(B) : 0.0;
  rep.rho_min = kernels::min_val(s.rho.v.data(), s.rho.v.size());
  return rep;
}

}  // namespace exmhd
