#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exmhd/checks.hpp"
#include "exmhd/config.hpp"
#include "exmhd/csv.hpp"
#include "exmhd/equilibria.hpp"
#include "exmhd/hodge.hpp"
#include "exmhd/invariants.hpp"
#include "exmhd/snapshot.hpp"

// Exit codes: 0 all good, 1 a check failed, 2 malformed input, 3 runtime abort.

namespace {

using namespace exmhd;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kRuntimeAbort = 3;

void print_lines(const std::vector<CheckLine>& lines) {
  for (const auto& ln : lines)
    std::printf("%-48s %11.3e  (tol %.0e)  %s\n", ln.name.c_str(), ln.residual, ln.tol,
                ln.pass() ? "PASS" : "FAIL");
}

int cmd_identities(const std::vector<int>& ns, int grid) {
  bool ok = true;
  for (int n : ns) {
    auto lines = identity_suite(n, grid);
    print_lines(lines);
    ok = ok && all_pass(lines);
  }
  std::printf("identities: %s\n", ok ? "all PASS" : "FAILURES above");
  return ok ? kOk : kCheckFailed;
}

int cmd_oracle(const std::vector<int>& ns, int points) {
  bool ok = true;
  for (int n : ns) {
    auto lines = oracle_suite(n, points);
    print_lines(lines);
    ok = ok && all_pass(lines);
  }
  std::printf("oracle: %s\n", ok ? "all PASS" : "FAILURES above");
  return ok ? kOk : kCheckFailed;
}

int cmd_run(const std::string& config_path) {
  SimConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  }

  try {
    MhdState s = make_initial(cfg.box, cfg.closure, cfg.seed, cfg.initial);
    TestFunctionBattery battery = default_battery();
    ReportFlags flags{!cfg.euler, cfg.symmetric_axis};

    std::string csv;
    RunControl ctl;
    ctl.dt = cfg.dt;
    ctl.t_end = cfg.t_end;
    ctl.report_every = cfg.report_every;
    int snapshot_counter = 0;
    ctl.on_report = [&](const MhdState& st, int step) {
      InvariantReport rep = report(st, cfg.closure, battery, flags);
      if (csv.empty()) csv = csv_header(rep) + "\n";
      csv += csv_row(rep) + "\n";
      if (cfg.snapshot_every > 0 && step % cfg.snapshot_every == 0) {
        char name[32];
        std::snprintf(name, sizeof(name), "_%06d.snap", snapshot_counter++);
        write_snapshot(cfg.snapshot_prefix + name, st);
      }
    };
    run(s, cfg.closure, ctl);

    std::ofstream out(cfg.invariants_csv, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::fprintf(stderr, "cannot open %s for writing\n", cfg.invariants_csv.c_str());
      return kRuntimeAbort;
    }
    out << csv;
    return kOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "run aborted: %s\n", e.what());
    return kRuntimeAbort;
  }
}

Closure closure_from_flags(const std::string& type, double c, double K, double gamma,
                           double rho0, double mu0) {
  if (type == "incompressible") return incompressible_closure(rho0, mu0);
  if (type == "isothermal") return isothermal_closure(c, mu0);
  if (type == "polytropic") return polytropic_closure(K, gamma, mu0);
  throw std::invalid_argument("closure type must be incompressible, isothermal, or polytropic");
}

int cmd_invariants(const std::string& snap_path, const Closure& cl) {
  Snapshot snap;
  try {
    snap = read_snapshot(snap_path);
  } catch (const SnapshotError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  }

  try {
    if (snap.state) {
      const MhdState& s = *snap.state;
      bool magnetic = false;
      for (const auto& comp : s.A.comp) magnetic = magnetic || max_abs(comp) != 0.0;
      InvariantReport rep = report(s, cl, default_battery(), ReportFlags{magnetic, -1});
      std::printf("%s\n%s\n", csv_header(rep).c_str(), csv_row(rep).c_str());
      return kOk;
    }

    const KForm& B = *snap.form;
    if (B.degree != 2) {
      std::fprintf(stderr, "invariants: form snapshot must hold a 2-form, got degree %d\n",
                   B.degree);
      return kBadInput;
    }
    const BoxSpec& box = B.box;
    const int n = box.n;
    std::printf("t = %.17g\n", snap.t);
    std::printf("sup|B| = %.17g\n", sup_norm(B));
    if (n % 2 == 1) {
      const int m = (n - 1) / 2;
      std::vector<double> r = orthogonality(B, m);
      for (int j = 0; j < n; ++j) std::printf("ortho%d = %.17g\n", j + 1, r[j]);
      PotentialParts pot = vector_potential(B);
      if (sup_norm(pot.xi) <= 1e-9 * std::max(1.0, sup_norm(B)))
        std::printf("M = %.17g\n", odd_helicity(pot.A, B, m));
      else
        std::printf("M = (undefined: B has a harmonic part)\n");
    } else {
      ScalarField rho = make_field(box, cl.rho0);
      for (const auto& tf : default_battery())
        std::printf("W_%s = %.17g\n", tf.name.c_str(), even_casimir(B, rho, tf.f));
    }
    return kOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "invariants failed: %s\n", e.what());
    return kRuntimeAbort;
  }
}

int cmd_decompose(const std::string& snap_path) {
  Snapshot snap;
  try {
    snap = read_snapshot(snap_path);
  } catch (const SnapshotError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  }
  if (!snap.form) {
    std::fprintf(stderr, "decompose: expected a k-form snapshot, got a full state\n");
    return kBadInput;
  }

  try {
    const KForm& w = *snap.form;
    HodgeParts parts = hodge_decompose(w);
    double n2 = inner(w, w);
    double e2 = inner(parts.exact, parts.exact);
    double c2 = inner(parts.coexact, parts.coexact);
    double h2 = inner(parts.harmonic, parts.harmonic);
    std::printf("|omega|    = %.17g\n", std::sqrt(n2));
    std::printf("|exact|    = %.17g\n", std::sqrt(e2));
    std::printf("|coexact|  = %.17g\n", std::sqrt(c2));
    std::printf("|harmonic| = %.17g\n", std::sqrt(h2));
    double pyth = std::fabs(n2 - e2 - c2 - h2) / std::max(n2, 1e-30);
    std::printf("pythagoras residual = %.3e\n", pyth);
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "decompose: %s\n", e.what());
    return kBadInput;
  }
}

int cmd_equilibrium(const std::string& name, int grid, const std::vector<double>& params,
                    double amp, double perturb_h, const std::string& write_path) {
  const double tau = 6.283185307179586476925287;
  MhsCandidate cand;
  try {
    if (name == "beltrami3") {
      double a = params.size() > 0 ? params[0] : 1.0;
      double b = params.size() > 1 ? params[1] : 1.0;
      double c = params.size() > 2 ? params[2] : 1.0;
      BoxSpec box = build_box(3, std::vector<int>(3, grid), std::vector<double>(3, tau),
                              std::vector<double>(3, 1.0));
      cand = beltrami3(box, a, b, c);
    } else if (name == "slab2") {
      BoxSpec box = build_box(2, std::vector<int>(2, grid), std::vector<double>(2, tau),
                              std::vector<double>(2, 1.0));
      cand = slab2(box, [amp](double x) { return 1.0 + amp * std::sin(x); });
    } else {
      std::fprintf(stderr, "equilibrium: unknown fixture %s (beltrami3, slab2)\n",
                   name.c_str());
      return kBadInput;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "equilibrium: %s\n", e.what());
    return kBadInput;
  }

  if (perturb_h != 0.0)
    for (auto& v : cand.h.v) v *= 1.0 + perturb_h;

  MhsResidual res = mhs_residual(cand);
  bool ok = res.force <= 1e-10 && res.closure <= 1e-10;
  std::printf("%s: force residual %.3e, closure residual %.3e  (tol 1e-10)  %s\n",
              name.c_str(), res.force, res.closure, ok ? "PASS" : "FAIL");
  if (!write_path.empty()) write_snapshot(write_path, cand.B, 0.0);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differential-forms MHD toolbox"};
  app.require_subcommand(1);

  std::vector<int> id_ns{2, 3, 4, 5};
  int id_grid = 16;
  CLI::App* identities = app.add_subcommand(
      "identities", "exterior calculus identity suite on random fields");
  identities->add_option("--n", id_ns, "dimensions to check")->delimiter(',');
  identities->add_option("--grid", id_grid, "points per axis");

  std::vector<int> or_ns{2, 3, 4, 5, 6};
  int or_points = 100;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "pointwise cross-check against dense antisymmetric tensors");
  oracle->add_option("--n", or_ns, "dimensions to check")->delimiter(',');
  oracle->add_option("--points", or_points, "sample points per degree");

  std::string config_path;
  CLI::App* run_cmd = app.add_subcommand("run", "integrate a configured flow");
  run_cmd->add_option("config", config_path, "JSON configuration file")->required();

  std::string snap_path, cl_type = "isothermal";
  double cl_c = 1.0, cl_K = 1.0, cl_gamma = 5.0 / 3.0, cl_rho0 = 1.0, cl_mu0 = 1.0;
  CLI::App* inv = app.add_subcommand("invariants", "evaluate a snapshot's functionals");
  inv->add_option("snapshot", snap_path, "snapshot file")->required();
  inv->add_option("--closure", cl_type, "closure type for energies (default isothermal)");
  inv->add_option("--c", cl_c, "isothermal sound speed");
  inv->add_option("--K", cl_K, "polytropic constant");
  inv->add_option("--gamma", cl_gamma, "polytropic exponent");
  inv->add_option("--rho0", cl_rho0, "reference density");
  inv->add_option("--mu0", cl_mu0, "magnetic permeability");

  std::string dec_path;
  CLI::App* dec = app.add_subcommand("decompose", "Hodge-decompose a k-form snapshot");
  dec->add_option("snapshot", dec_path, "snapshot file")->required();

  std::string eq_name;
  int eq_grid = 16;
  std::vector<double> eq_params;
  double eq_amp = 0.3, eq_perturb = 0.0;
  std::string eq_write;
  CLI::App* eq = app.add_subcommand("equilibrium", "check an equilibrium fixture");
  eq->add_option("name", eq_name, "fixture: beltrami3 or slab2")->required();
  eq->add_option("params", eq_params, "beltrami3 coefficients a b c");
  eq->add_option("--grid", eq_grid, "points per axis");
  eq->add_option("--amp", eq_amp, "slab2 profile amplitude");
  eq->add_option("--perturb-h", eq_perturb, "multiply h by (1+x) to break the balance");
  eq->add_option("--write", eq_write, "write the fixture field as a snapshot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  }

  try {
    if (*identities) return cmd_identities(id_ns, id_grid);
    if (*oracle) return cmd_oracle(or_ns, or_points);
    if (*run_cmd) return cmd_run(config_path);
    if (*inv)
      return cmd_invariants(
          snap_path, closure_from_flags(cl_type, cl_c, cl_K, cl_gamma, cl_rho0, cl_mu0));
    if (*dec) return cmd_decompose(dec_path);
    if (*eq)
      return cmd_equilibrium(eq_name, eq_grid, eq_params, eq_amp, eq_perturb, eq_write);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kRuntimeAbort;
  }
  return kOk;
}
