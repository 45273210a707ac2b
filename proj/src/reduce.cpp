// Copyright 2026 The Hypercode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypercode/reduce.hpp"

#include <numeric>
#include <sstream>

namespace hypercode::reduce {

CellComplex reduce_to_surface(const Hypermap &h, const SpecialDarts &s) {
  // face_code validates s and fixes the 1-cell order and vertex incidences.
  const chain::QuotientCode face = chain::face_code(h, s);
  CellComplex c;
  c.zero_cells = face.x_axis;
  c.one_cells = face.qubit_labels;
  c.two_cells = face.z_axis;
  c.incidence21 = chain::boundary2_multiplicities(h, s);
  c.incidence10 = face.boundary1;
  c.source_euler = hypercode::euler_characteristic(h);
  return c;
}

int euler_characteristic(const CellComplex &c) {
  return static_cast<int>(c.zero_cells.size()) - static_cast<int>(c.one_cells.size()) +
         static_cast<int>(c.two_cells.size());
}

gf2::BitMatrix boundary2(const CellComplex &c) {
  gf2::BitMatrix m(c.one_cells.size(), c.two_cells.size());
  for (std::size_t r = 0; r < c.incidence21.size() && r < m.rows(); ++r) {
    for (std::size_t f = 0; f < c.incidence21[r].size() && f < m.cols(); ++f) {
      if (c.incidence21[r][f] & 1u) m.set(r, f);
    }
  }
  return m;
}

std::size_t homology_dimension(const CellComplex &c) {
  return c.one_cells.size() - gf2::rank(c.incidence10) - gf2::rank(boundary2(c));
}

css::CssCode surface_code(const CellComplex &c) {
  std::vector<std::string> x_names, z_names;
  for (std::size_t i = 0; i < c.zero_cells.size(); ++i) x_names.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < c.two_cells.size(); ++i) z_names.push_back("f" + std::to_string(i + 1));
  return css::make_code(c.incidence10, gf2::transpose(boundary2(c)), c.one_cells,
                        std::move(x_names), std::move(z_names));
}

bool SurfaceReport::ok() const {
  for (const auto &check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

std::string SurfaceReport::to_string() const {
  std::ostringstream out;
  for (const auto &check : checks) {
    out << (check.passed ? "pass " : "FAIL ") << check.name;
    if (!check.detail.empty()) out << ": " << check.detail;
    out << '\n';
  }
  return out.str();
}

SurfaceReport validate_surface(const CellComplex &c) {
  SurfaceReport report;
  const std::size_t ones = c.one_cells.size();
  const std::size_t twos = c.two_cells.size();

  bool shape_ok = c.incidence21.size() == ones && c.incidence10.rows() == c.zero_cells.size() &&
                  c.incidence10.cols() == ones;
  for (const auto &row : c.incidence21) shape_ok = shape_ok && row.size() == twos;
  report.checks.push_back({"shape", shape_ok,
                           shape_ok ? "" : "incidence matrices do not match the cell lists"});
  if (!shape_ok) return report;

  {
    std::string bad;
    for (std::size_t r = 0; r < ones; ++r) {
      const auto total = std::accumulate(c.incidence21[r].begin(), c.incidence21[r].end(),
                                         std::uint64_t{0});
      if (total != 2) {
        if (!bad.empty()) bad += ", ";
        bad += "1-cell " + std::to_string(c.one_cells[r] + 1) + " has incidence total " +
               std::to_string(total);
      }
    }
    report.checks.push_back({"closed-surface", bad.empty(), bad});
  }

  {
    std::string bad;
    for (std::size_t r = 0; r < ones; ++r) {
      const std::size_t w = c.incidence10.column(r).weight();
      if (w != 0 && w != 2) {
        if (!bad.empty()) bad += ", ";
        bad += "1-cell " + std::to_string(c.one_cells[r] + 1) + " has " + std::to_string(w) +
               " endpoints";
      }
    }
    report.checks.push_back({"endpoints", bad.empty(), bad});
  }

  {
    const bool chain_ok = gf2::multiply(c.incidence10, boundary2(c)).is_zero();
    report.checks.push_back(
        {"chain-condition", chain_ok, chain_ok ? "" : "boundary of a 2-cell is not a cycle"});
  }

  {
    const int chi = euler_characteristic(c);
    const bool euler_ok = chi == c.source_euler && chi % 2 == 0 && chi <= 2;
    report.checks.push_back({"euler", euler_ok,
                             "chi = " + std::to_string(chi) + ", source chi = " +
                                 std::to_string(c.source_euler)});
  }
  return report;
}

}  // namespace hypercode::reduce
