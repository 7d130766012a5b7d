#include "exmhd/exterior.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "exmhd/threading.hpp"

namespace exmhd {

namespace {

void require_same_box(const BoxSpec& a, const BoxSpec& b, const char* op) {
  if (!(a == b)) throw std::invalid_argument(std::string(op) + ": box mismatch");
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// One accumulation term of a bilinear combinatorial op, grouped by output component so
// component loops can run in parallel without write contention.
struct Term {
  int a;     // input rank (first operand)
  int b;     // input rank (second operand), unused for unary plans
  double sign;
};
using Plan = std::vector<std::vector<Term>>;  // [output rank] -> terms

const Plan& wedge_plan(int n, int k, int l) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, Plan> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(n, k, l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Plan plan(binomial(n, k + l));
  auto as = all_multi_indices(n, k);
  auto bs = all_multi_indices(n, l);
  for (int ia = 0; ia < static_cast<int>(as.size()); ++ia) {
    for (int ib = 0; ib < static_cast<int>(bs.size()); ++ib) {
      auto m = merge(as[ia], bs[ib]);
      if (m.sign == 0) continue;
      plan[rank_of(m.index, n)].push_back({ia, ib, static_cast<double>(m.sign)});
    }
  }
  return cache.emplace(key, std::move(plan)).first->second;
}

// interior product: for output I (degree k-1), terms (axis j, input rank K, sign) with
// omega_{jI} = sign * omega_K.
const Plan& interior_plan(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Plan> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Plan plan(binomial(n, k - 1));
  auto outs = all_multi_indices(n, k - 1);
  for (int io = 0; io < static_cast<int>(outs.size()); ++io) {
    for (int axis = 0; axis < n; ++axis) {
      auto ins = insert_axis(outs[io], axis);
      if (ins.sign == 0) continue;
      plan[io].push_back({axis, rank_of(ins.index, n), static_cast<double>(ins.sign)});
    }
  }
  return cache.emplace(key, std::move(plan)).first->second;
}

}  // namespace

KForm make_kform(const BoxSpec& box, int degree, double fill) {
  if (degree < 0 || degree > box.n) throw std::invalid_argument("make_kform: bad degree");
  KForm f;
  f.box = box;
  f.degree = degree;
  int count = binomial(box.n, degree);
  f.comp.reserve(count);
  for (int i = 0; i < count; ++i) f.comp.push_back(make_field(box, fill));
  return f;
}

VecField make_vecfield(const BoxSpec& box, double fill) {
  VecField x;
  x.box = box;
  x.comp.reserve(box.n);
  for (int i = 0; i < box.n; ++i) x.comp.push_back(make_field(box, fill));
  return x;
}

KForm wedge(const KForm& a, const KForm& b, Dealias da) {
  require_same_box(a.box, b.box, "wedge");
  const int n = a.box.n;
  if (a.degree + b.degree > n) throw std::invalid_argument("wedge: degree overflow");
  const Plan& plan = wedge_plan(n, a.degree, b.degree);
  KForm out = make_kform(a.box, a.degree + b.degree);
  parallel_for(out.comp.size(), [&](std::size_t io) {
    for (const Term& t : plan[io])
      accumulate_product(out.comp[io], a.comp[t.a], b.comp[t.b], t.sign);
    if (da == Dealias::on) out.comp[io] = dealias(out.comp[io]);
  });
  return out;
}

KForm wedge_power(const KForm& beta, int m, Dealias da) {
  if (m < 0) throw std::invalid_argument("wedge_power: negative exponent");
  if (beta.degree * m > beta.box.n) throw std::invalid_argument("wedge_power: degree overflow");
  if (m == 0) return make_kform(beta.box, 0, 1.0);
  KForm out = beta;
  for (int i = 1; i < m; ++i) out = wedge(out, beta, da);
  return out;
}

KForm d(const KForm& omega) {
  const int n = omega.box.n;
  const int k = omega.degree;
  if (k >= n) throw std::invalid_argument("d: input already top degree");

  // stage 1: all partial derivatives d_j omega_I for j outside I
  auto ins = all_multi_indices(n, k);
  std::vector<std::vector<int>> axes(ins.size());
  std::vector<std::vector<ScalarField>> partials(ins.size());
  for (std::size_t ci = 0; ci < ins.size(); ++ci) {
    auto comp_axes = complement(ins[ci], n);
    for (int s = 0; s < comp_axes.k; ++s) axes[ci].push_back(comp_axes.idx[s]);
  }
  parallel_for(ins.size(), [&](std::size_t ci) {
    partials[ci] = spectral_partials(omega.comp[ci], axes[ci]);
  });

  // stage 2: per output K, pull d_j omega_{K\j} with the insertion sign
  KForm out = make_kform(omega.box, k + 1);
  auto outs = all_multi_indices(n, k + 1);
  parallel_for(outs.size(), [&](std::size_t io) {
    for (int slot = 0; slot < outs[io].k; ++slot) {
      const int j = outs[io].idx[slot];
      auto rem = remove_axis(outs[io], j);
      const int ci = rank_of(rem.index, n);
      int pos = -1;
      for (std::size_t p = 0; p < axes[ci].size(); ++p)
        if (axes[ci][p] == j) pos = static_cast<int>(p);
      add_scaled(out.comp[io], rem.sign, partials[ci][pos]);
    }
  });
  return out;
}

KForm interior(const VecField& X, const KForm& omega, Dealias da) {
  require_same_box(X.box, omega.box, "interior");
  const int n = omega.box.n;
  const int k = omega.degree;
  if (k < 1) throw std::invalid_argument("interior: degree-0 input");
  const Plan& plan = interior_plan(n, k);
  KForm out = make_kform(omega.box, k - 1);
  parallel_for(out.comp.size(), [&](std::size_t io) {
    for (const Term& t : plan[io])
      accumulate_product(out.comp[io], X.comp[t.a], omega.comp[t.b], t.sign);
    if (da == Dealias::on) out.comp[io] = dealias(out.comp[io]);
  });
  return out;
}

KForm star(const KForm& omega) {
  const int n = omega.box.n;
  const int k = omega.degree;
  KForm out = make_kform(omega.box, n - k);
  auto ins = all_multi_indices(n, k);
  const double sg = omega.box.sqrt_g();
  parallel_for(ins.size(), [&](std::size_t ci) {
    const MultiIndex& I = ins[ci];
    double factor = sg * split_sign(I, n);
    for (int s = 0; s < I.k; ++s) factor /= omega.box.metric[I.idx[s]];
    const int io = rank_of(complement(I, n), n);
    kernels::scaled_copy(out.comp[io].v.data(), omega.comp[ci].v.data(), factor,
                         omega.comp[ci].v.size());
  });
  return out;
}

KForm codifferential(const KForm& omega) {
  const int n = omega.box.n;
  const int k = omega.degree;
  if (k < 1) throw std::invalid_argument("codifferential: degree-0 input");
  KForm res = star(d(star(omega)));
  // (-1)^(n(k+1)+1); at k=2 this is the (-1)^(3n+1) rule for 2-forms
  if ((n * (k + 1) + 1) % 2 != 0) scale_form(res, -1.0);
  return res;
}

KForm lie(const VecField& X, const KForm& omega, Dealias da) {
  const int n = omega.box.n;
  const int k = omega.degree;
  KForm out = make_kform(omega.box, k);
  if (k < n) add_scaled_form(out, 1.0, interior(X, d(omega), da));
  if (k >= 1) add_scaled_form(out, 1.0, d(interior(X, omega, da)));
  return out;
}

VecField sharp(const KForm& u) {
  if (u.degree != 1) throw std::invalid_argument("sharp: expects a 1-form");
  VecField x = make_vecfield(u.box);
  for (int i = 0; i < u.box.n; ++i)
    kernels::scaled_copy(x.comp[i].v.data(), u.comp[i].v.data(), 1.0 / u.box.metric[i],
                         u.comp[i].v.size());
  return x;
}

KForm flat(const VecField& X) {
  KForm u = make_kform(X.box, 1);
  for (int i = 0; i < X.box.n; ++i)
    kernels::scaled_copy(u.comp[i].v.data(), X.comp[i].v.data(), X.box.metric[i],
                         X.comp[i].v.size());
  return u;
}

ScalarField norm2(const KForm& omega) {
  const int n = omega.box.n;
  ScalarField out = make_field(omega.box);
  auto ins = all_multi_indices(n, omega.degree);
  const double kfact = factorial(omega.degree);
  for (std::size_t ci = 0; ci < ins.size(); ++ci) {
    double factor = kfact;
    for (int s = 0; s < ins[ci].k; ++s) factor /= omega.box.metric[ins[ci].idx[s]];
    accumulate_product(out, omega.comp[ci], omega.comp[ci], factor);
  }
  return out;
}

double inner(const KForm& a, const KForm& b) {
  require_same_box(a.box, b.box, "inner");
  if (a.degree != b.degree) throw std::invalid_argument("inner: degree mismatch");
  auto ins = all_multi_indices(a.box.n, a.degree);
  const double weight = a.box.sqrt_g() * a.box.cell_volume();
  double acc = 0.0;
  for (std::size_t ci = 0; ci < ins.size(); ++ci) {
    double factor = 1.0;
    for (int s = 0; s < ins[ci].k; ++s) factor /= a.box.metric[ins[ci].idx[s]];
    acc += factor * kernels::dot(a.comp[ci].v.data(), b.comp[ci].v.data(),
                                 a.comp[ci].v.size());
  }
  return acc * weight;
}

double form_integral(const KForm& omega) {
  if (omega.degree != omega.box.n)
    throw std::invalid_argument("form_integral: expects a top-degree form");
  return kernels::sum(omega.comp[0].v.data(), omega.comp[0].v.size()) *
         omega.box.cell_volume();
}

double sup_norm(const KForm& omega) {
  ScalarField n2 = norm2(omega);
  return std::sqrt(kernels::max_val(n2.v.data(), n2.v.size()));
}

void add_scaled_form(KForm& y, double a, const KForm& x) {
  require_same_box(y.box, x.box, "add_scaled_form");
  if (y.degree != x.degree) throw std::invalid_argument("add_scaled_form: degree mismatch");
  for (std::size_t ci = 0; ci < y.comp.size(); ++ci) add_scaled(y.comp[ci], a, x.comp[ci]);
}

void scale_form(KForm& y, double a) {
  for (auto& c : y.comp) scale_field(c, a);
}

KForm dealias_form(const KForm& omega) {
  KForm out = make_kform(omega.box, omega.degree);
  parallel_for(omega.comp.size(),
               [&](std::size_t ci) { out.comp[ci] = dealias(omega.comp[ci]); });
  return out;
}

}  // namespace exmhd
