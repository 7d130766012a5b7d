#include "exmhd/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace exmhd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& problem) {
  throw ConfigError(field + ": " + problem);
}

void reject_unknown(const json& j, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) fail(where + "." + item.key(), "unknown key");
  }
}

const json* find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double get_number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<int>();
}

std::vector<double> get_numbers(const json& j, const std::string& field, std::size_t count) {
  if (!j.is_array()) fail(field, "expected an array");
  if (j.size() != count)
    fail(field, "expected " + std::to_string(count) + " entries, got " +
                    std::to_string(j.size()));
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_number(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

BoxSpec parse_box(const json& j) {
  if (!j.is_object()) fail("box", "expected an object");
  reject_unknown(j, "box", {"n", "dims", "lengths", "metric"});

  const json* dims_j = find(j, "dims");
  if (!dims_j) fail("box.dims", "required");
  if (!dims_j->is_array() || dims_j->empty()) fail("box.dims", "expected a non-empty array");
  std::vector<int> dims;
  for (std::size_t i = 0; i < dims_j->size(); ++i)
    dims.push_back(get_int((*dims_j)[i], "box.dims[" + std::to_string(i) + "]"));
  const int n = static_cast<int>(dims.size());

  if (const json* n_j = find(j, "n"))
    if (get_int(*n_j, "box.n") != n) fail("box.n", "does not match the length of box.dims");

  const double tau = 6.283185307179586476925287;
  std::vector<double> lengths(n, tau), metric(n, 1.0);
  if (const json* v = find(j, "lengths")) lengths = get_numbers(*v, "box.lengths", n);
  if (const json* v = find(j, "metric")) metric = get_numbers(*v, "box.metric", n);

  try {
    return build_box(n, dims, lengths, metric);
  } catch (const std::invalid_argument& e) {
    fail("box", e.what());
  }
}

Closure parse_closure(const json& j) {
  if (!j.is_object()) fail("closure", "expected an object");
  const json* type_j = find(j, "type");
  if (!type_j || !type_j->is_string()) fail("closure.type", "required string");
  std::string type = type_j->get<std::string>();

  double mu0 = 1.0;
  if (const json* v = find(j, "mu0")) mu0 = get_number(*v, "closure.mu0");

  try {
    if (type == "incompressible") {
      reject_unknown(j, "closure", {"type", "rho0", "mu0"});
      double rho0 = 1.0;
      if (const json* v = find(j, "rho0")) rho0 = get_number(*v, "closure.rho0");
      return incompressible_closure(rho0, mu0);
    }
    if (type == "isothermal") {
      reject_unknown(j, "closure", {"type", "c", "mu0"});
      const json* c_j = find(j, "c");
      if (!c_j) fail("closure.c", "required for the isothermal closure");
      return isothermal_closure(get_number(*c_j, "closure.c"), mu0);
    }
    if (type == "polytropic") {
      reject_unknown(j, "closure", {"type", "K", "gamma", "mu0"});
      const json* K_j = find(j, "K");
      const json* g_j = find(j, "gamma");
      if (!K_j) fail("closure.K", "required for the polytropic closure");
      if (!g_j) fail("closure.gamma", "required for the polytropic closure");
      return polytropic_closure(get_number(*K_j, "closure.K"),
                                get_number(*g_j, "closure.gamma"), mu0);
    }
  } catch (const std::invalid_argument& e) {
    fail("closure", e.what());
  }
  fail("closure.type", "expected incompressible, isothermal, or polytropic");
}

InitialOptions parse_initial(const json& j) {
  InitialOptions opt;
  if (!j.is_object()) fail("initial", "expected an object");
  reject_unknown(j, "initial", {"rho_mean", "rho_eps", "u_amp", "a_amp", "band"});
  if (const json* v = find(j, "rho_mean")) opt.rho_mean = get_number(*v, "initial.rho_mean");
  if (const json* v = find(j, "rho_eps")) opt.rho_eps = get_number(*v, "initial.rho_eps");
  if (const json* v = find(j, "u_amp")) opt.u_amp = get_number(*v, "initial.u_amp");
  if (const json* v = find(j, "a_amp")) opt.a_amp = get_number(*v, "initial.a_amp");
  if (const json* v = find(j, "band")) opt.band = get_int(*v, "initial.band");

  if (!(opt.rho_mean > 0.0)) fail("initial.rho_mean", "must be positive");
  if (opt.rho_eps < 0.0 || opt.rho_eps > 0.2)
    fail("initial.rho_eps", "must lie in [0, 0.2]");
  if (opt.u_amp < 0.0) fail("initial.u_amp", "must be nonnegative");
  if (opt.a_amp < 0.0) fail("initial.a_amp", "must be nonnegative");
  if (opt.band < 0) fail("initial.band", "must be nonnegative");
  return opt;
}

}  // namespace

SimConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) fail("config", "top level must be an object");
  reject_unknown(j, "config",
                 {"box", "closure", "mode", "incompressible", "symmetric_axis", "seed",
                  "initial", "dt", "t_end", "report_every", "snapshot_every", "output"});

  SimConfig cfg;

  const json* box_j = find(j, "box");
  if (!box_j) fail("box", "required");
  cfg.box = parse_box(*box_j);

  const json* cl_j = find(j, "closure");
  if (!cl_j) fail("closure", "required");
  cfg.closure = parse_closure(*cl_j);

  if (const json* v = find(j, "mode")) {
    if (!v->is_string()) fail("mode", "expected \"mhd\" or \"euler\"");
    std::string mode = v->get<std::string>();
    if (mode == "euler")
      cfg.euler = true;
    else if (mode != "mhd")
      fail("mode", "expected \"mhd\" or \"euler\"");
  }

  if (const json* v = find(j, "incompressible")) {
    if (!v->is_boolean()) fail("incompressible", "expected a boolean");
    cfg.incompressible = v->get<bool>();
    if (!cfg.incompressible && cfg.closure.kind == ClosureKind::incompressible)
      fail("incompressible", "cannot be false under the incompressible closure");
  }
  if (cfg.closure.kind == ClosureKind::incompressible) cfg.incompressible = true;

  if (const json* v = find(j, "symmetric_axis")) {
    cfg.symmetric_axis = get_int(*v, "symmetric_axis");
    if (cfg.symmetric_axis < 0 || cfg.symmetric_axis >= cfg.box.n)
      fail("symmetric_axis", "must name an axis of the box");
  }

  if (const json* v = find(j, "seed")) {
    if (!v->is_number_unsigned()) fail("seed", "expected an unsigned integer");
    cfg.seed = v->get<std::uint64_t>();
  }

  if (const json* v = find(j, "initial")) cfg.initial = parse_initial(*v);
  cfg.initial.symmetric_axis = cfg.symmetric_axis;
  cfg.initial.euler_only = cfg.euler;
  cfg.initial.incompressible = cfg.incompressible;

  if (const json* v = find(j, "dt")) cfg.dt = get_number(*v, "dt");
  if (!(cfg.dt > 0.0)) fail("dt", "must be positive");
  if (const json* v = find(j, "t_end")) cfg.t_end = get_number(*v, "t_end");
  if (cfg.t_end < 0.0) fail("t_end", "must be nonnegative");
  if (const json* v = find(j, "report_every")) cfg.report_every = get_int(*v, "report_every");
  if (cfg.report_every < 1) fail("report_every", "must be at least 1");
  if (const json* v = find(j, "snapshot_every")) {
    cfg.snapshot_every = get_int(*v, "snapshot_every");
    if (cfg.snapshot_every < 0) fail("snapshot_every", "must be nonnegative");
  }

  if (const json* v = find(j, "output")) {
    if (!v->is_object()) fail("output", "expected an object");
    reject_unknown(*v, "output", {"invariants_csv", "snapshot_prefix"});
    if (const json* p = find(*v, "invariants_csv")) {
      if (!p->is_string()) fail("output.invariants_csv", "expected a string");
      cfg.invariants_csv = p->get<std::string>();
    }
    if (const json* p = find(*v, "snapshot_prefix")) {
      if (!p->is_string()) fail("output.snapshot_prefix", "expected a string");
      cfg.snapshot_prefix = p->get<std::string>();
    }
  }

  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace exmhd
