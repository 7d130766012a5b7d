#include "exmhd/csv.hpp"

#include <cstdio>

namespace exmhd {

namespace {

void num(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out += buf;
}

void col(std::string& out, const std::string& name) {
  if (!out.empty()) out += ',';
  out += name;
}

void val(std::string& out, double x) {
  if (!out.empty()) out += ',';
  num(out, x);
}

}  // namespace

std::string csv_header(const InvariantReport& r) {
  std::string out;
  col(out, "t");
  col(out, "N");
  col(out, "H");
  for (std::size_t i = 0; i < r.P.size(); ++i) col(out, "P" + std::to_string(i + 1));
  if (r.C) col(out, "C");
  if (r.M) col(out, "M");
  if (r.Hf) col(out, "Hf");
  for (std::size_t i = 0; i < r.ortho.size(); ++i)
    col(out, "ortho" + std::to_string(i + 1));
  for (const auto& [name, v] : r.W) col(out, "W_" + name);
  for (const auto& [name, v] : r.E) col(out, "E_" + name);
  for (const auto& [name, v] : r.Pms) col(out, "Pms_" + name);
  for (const auto& [name, v] : r.Q) col(out, "Q_" + name);
  col(out, "maxu");
  col(out, "maxB");
  col(out, "minrho");
  return out;
}

std::string csv_row(const InvariantReport& r) {
  std::string out;
  val(out, r.t);
  val(out, r.N);
  val(out, r.H);
  for (double p : r.P) val(out, p);
  if (r.C) val(out, *r.C);
  if (r.M) val(out, *r.M);
  if (r.Hf) val(out, *r.Hf);
  for (double o : r.ortho) val(out, o);
  for (const auto& [name, v] : r.W) val(out, v);
  for (const auto& [name, v] : r.E) val(out, v);
  for (const auto& [name, v] : r.Pms) val(out, v);
  for (const auto& [name, v] : r.Q) val(out, v);
  val(out, r.u_max);
  val(out, r.B_max);
  val(out, r.rho_min);
  return out;
}

}  // namespace exmhd
