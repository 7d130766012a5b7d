#include <cmath>
#include <vector>

#include "doctest.h"
#include "exmhd/hodge.hpp"
#include "test_util.hpp"

using namespace exmhd;
using testutil::kTau;
using testutil::max_diff;
using testutil::random_form;
using testutil::sample;

namespace {

BoxSpec idbox(int n, int npts) {
  return build_box(n, std::vector<int>(n, npts), std::vector<double>(n, kTau),
                   std::vector<double>(n, 1.0));
}

double rel_inner(const KForm& a, const KForm& b) {
  double na = std::sqrt(inner(a, a));
  double nb = std::sqrt(inner(b, b));
  return std::fabs(inner(a, b)) / (na * nb + 1e-300);
}

// how far each component is from spatially constant
double constancy_defect(const KForm& f) {
  double worst = 0.0;
  for (const auto& c : f.comp) {
    double m = mean(c);
    for (double v : c.v) worst = std::max(worst, std::fabs(v - m));
  }
  return worst;
}

// rank of the collected harmonic coefficient vectors, by Gaussian elimination
int numeric_rank(std::vector<std::vector<double>> rows, double tol) {
  int rank = 0;
  const int cols = static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    double best = tol;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (std::fabs(rows[r][c]) > best) {
        best = std::fabs(rows[r][c]);
        pivot = r;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0.0) continue;
      double f = rows[r][c] / rows[rank][c];
      for (int cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("poisson solve") {
  BoxSpec box = idbox(2, 16);
  auto f = sample(box, [](const double* x) { return -std::sin(x[0]); });
  auto u = poisson(f);
  auto expect = sample(box, [](const double* x) { return std::sin(x[0]); });
  CHECK(testutil::max_diff(u, expect) <= 1e-12);

  CHECK(max_abs(poisson(make_field(box))) == 0.0);
  CHECK_THROWS_AS(poisson(make_field(box, 1.0)), std::invalid_argument);

  // residual check on a rough mean-zero field: apply sum_i g^ii d_i^2 back
  BoxSpec wb = build_box(3, {16, 16, 16}, {kTau, 3.0, kTau}, {4.0, 1.0, 2.0});
  auto g = testutil::random_field(wb, 5, 4);
  ScalarField mz = g;
  add_scaled(mz, -mean(g) / 1.0, make_field(wb, 1.0));
  auto sol = poisson(mz);
  ScalarField back = make_field(wb);
  for (int a = 0; a < 3; ++a)
    add_scaled(back, 1.0 / wb.metric[a], spectral_partial(spectral_partial(sol, a), a));
  CHECK(testutil::max_diff(back, mz) <= 1e-11 * std::max(1.0, max_abs(mz)));
}

TEST_CASE("hodge decomposition") {
  CHECK_THROWS_AS(hodge_decompose(make_kform(idbox(2, 8), 0, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(hodge_decompose(make_kform(idbox(2, 8), 2, 1.0)), std::invalid_argument);

  SUBCASE("constant form is purely harmonic") {
    BoxSpec box = idbox(3, 8);
    KForm w = make_kform(box, 1);
    w.comp[0] = make_field(box, 0.3);
    w.comp[2] = make_field(box, -1.7);
    HodgeParts p = hodge_decompose(w);
    CHECK(testutil::form_max_abs(p.exact) <= 1e-13);
    CHECK(testutil::form_max_abs(p.coexact) <= 1e-13);
    CHECK(max_diff(p.harmonic, w) <= 1e-13);
  }

  SUBCASE("exact input reconstructs in the exact slot") {
    BoxSpec box = idbox(3, 12);
    KForm alpha = random_form(box, 1, 21, 2);
    KForm w = d(alpha);
    HodgeParts p = hodge_decompose(w);
    double scale = std::max(1.0, testutil::form_max_abs(w));
    CHECK(testutil::form_max_abs(p.coexact) <= 1e-10 * scale);
    CHECK(testutil::form_max_abs(p.harmonic) <= 1e-10 * scale);
    CHECK(max_diff(p.exact, w) <= 1e-10 * scale);
  }

  SUBCASE("random band-limited forms split orthogonally") {
    struct Case {
      int n, k, pts;
    };
    for (Case c : {Case{4, 2, 8}, Case{3, 1, 12}, Case{5, 3, 8}, Case{2, 1, 16}}) {
      std::vector<double> metric(c.n, 1.0);
      metric[0] = 4.0;
      BoxSpec box = build_box(c.n, std::vector<int>(c.n, c.pts),
                              std::vector<double>(c.n, kTau), metric);
      KForm w = random_form(box, c.k, 77 + 10 * c.n + c.k, 2);
      HodgeParts p = hodge_decompose(w);

      KForm sum = p.exact;
      add_scaled_form(sum, 1.0, p.coexact);
      add_scaled_form(sum, 1.0, p.harmonic);
      double scale = std::max(1.0, testutil::form_max_abs(w));
      CHECK(max_diff(sum, w) <= 1e-10 * scale);

      CHECK(rel_inner(p.exact, p.coexact) <= 1e-10);
      CHECK(rel_inner(p.exact, p.harmonic) <= 1e-10);
      CHECK(rel_inner(p.coexact, p.harmonic) <= 1e-10);
      CHECK(constancy_defect(p.harmonic) <= 1e-10 * scale);

      // pythagoras
      double n2 = inner(w, w);
      double parts = inner(p.exact, p.exact) + inner(p.coexact, p.coexact) +
                     inner(p.harmonic, p.harmonic);
      CHECK(n2 == doctest::Approx(parts).epsilon(1e-10));
    }
  }
}

TEST_CASE("harmonic basis dimensions and orthonormality") {
  CHECK(harmonic_basis(idbox(3, 8), 1).size() == 3);
  CHECK(harmonic_basis(idbox(4, 8), 2).size() == 6);

  BoxSpec wb = build_box(3, {8, 8, 8}, {kTau, 3.0, kTau}, {4.0, 1.0, 2.0});
  for (int k = 0; k <= 3; ++k) {
    auto basis = harmonic_basis(wb, k);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        double expect = i == j ? 1.0 : 0.0;
        CHECK(inner(basis[i], basis[j]) == doctest::Approx(expect).epsilon(1e-12));
      }
  }
}

TEST_CASE("harmonic rank matches torus betti numbers") {
  struct Case {
    int n, k, pts;
  };
  for (Case c : {Case{3, 1, 8}, Case{3, 2, 8}, Case{4, 2, 8}, Case{5, 2, 8}}) {
    BoxSpec box = idbox(c.n, c.pts);
    const int expect = binomial(c.n, c.k);
    std::vector<std::vector<double>> rows;
    for (int s = 0; s < expect + 4; ++s) {
      KForm w = random_form(box, c.k, 500 + 97 * s + c.n * 7 + c.k, 2);
      HodgeParts p = hodge_decompose(w);
      std::vector<double> row(p.harmonic.comp.size());
      for (std::size_t ci = 0; ci < row.size(); ++ci) row[ci] = mean(p.harmonic.comp[ci]);
      rows.push_back(std::move(row));
    }
    CHECK(numeric_rank(rows, 1e-8) == expect);
  }
}

TEST_CASE("vector potential recovery") {
  SUBCASE("constant field is pure harmonic part") {
    BoxSpec box = idbox(4, 8);
    KForm B = make_kform(box, 2);
    B.comp[0] = make_field(box, 0.8);
    auto [A, xi] = vector_potential(B);
    CHECK(testutil::form_max_abs(A) <= 1e-13);
    CHECK(max_diff(xi, B) <= 1e-13);
  }

  SUBCASE("exact field: potential reproduces it, coulomb gauge holds") {
    for (int n : {3, 5}) {
      BoxSpec box = idbox(n, n == 3 ? 12 : 8);
      KForm A0 = random_form(box, 1, 31 + n, 2);
      KForm B = d(A0);
      auto [A, xi] = vector_potential(B);
      double scale = std::max(1.0, sup_norm(B));
      CHECK(testutil::form_max_abs(xi) <= 1e-10 * scale);
      KForm rec = d(A);
      add_scaled_form(rec, 1.0, xi);
      CHECK(max_diff(rec, B) <= 1e-10 * scale);
      CHECK(sup_norm(codifferential(A)) <= 1e-10 * scale);
    }
  }

  SUBCASE("rejects non-closed input") {
    BoxSpec box = idbox(3, 12);
    KForm B = random_form(box, 2, 55, 2);  // generic 2-form, dB != 0
    CHECK_THROWS_AS(vector_potential(B), std::invalid_argument);
  }
}

TEST_CASE("leray projection") {
  BoxSpec box = build_box(3, {12, 12, 12}, {kTau, kTau, kTau}, {1.0, 2.0, 1.0});

  KForm alpha = random_form(box, 0, 61, 2);
  KForm grad = d(alpha);
  CHECK(sup_norm(leray_project(grad)) <= 1e-11 * std::max(1.0, sup_norm(grad)));

  KForm c = make_kform(box, 1);
  c.comp[0] = make_field(box, 1.5);
  c.comp[2] = make_field(box, -0.25);
  CHECK(max_diff(leray_project(c), c) <= 1e-13);

  KForm u = random_form(box, 1, 62, 3);
  KForm pu = leray_project(u);
  CHECK(sup_norm(codifferential(pu)) <= 1e-11 * std::max(1.0, sup_norm(u)));
  CHECK(max_diff(leray_project(pu), pu) <= 1e-12 * std::max(1.0, sup_norm(u)));
}
