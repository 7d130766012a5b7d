#pragma once

#include <string>

#include "exmhd/invariants.hpp"

// One CSV row per InvariantReport. Column set follows the report's populated fields:
//
//   t,N,H,P1..Pn,
//   odd boxes:  [C,M,]Hf[,ortho1..orthoN]    (C/M/ortho only on magnetic runs)
//   even boxes: [W_<f>...,]E_<f>...          (W only on magnetic runs)
//   symmetric:  [Pms_<f>...,]Q_<f>...
//   maxu,maxB,minrho
//
// Values print with 17 significant digits so a parsed row reproduces every double
// bit for bit, and rows for the same configuration are byte-identical across reruns.

namespace exmhd {

std::string csv_header(const InvariantReport& r);
std::string csv_row(const InvariantReport& r);

}  // namespace exmhd
