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

#ifndef HYPERCODE_REDUCE_HPP
#define HYPERCODE_REDUCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hypercode/chain.hpp"
#include "hypercode/css.hpp"
#include "hypercode/gf2.hpp"
#include "hypercode/hypermap.hpp"

namespace hypercode::reduce {

/// Surface cell structure equivalent to a face code.
///
/// 0-cells are the hypermap's vertices, 1-cells its non-special darts (the
/// curve for dart i joins v(i) and v(alpha^-1(i))) and 2-cells its faces.
/// incidence21 counts how often each 1-cell runs along each 2-cell's
/// boundary, so a curve bounding the same face twice records 2.
struct CellComplex {
  std::vector<Cycle> zero_cells;
  std::vector<Dart> one_cells;
  std::vector<Cycle> two_cells;
  std::vector<std::vector<std::uint32_t>> incidence21;  // one_cells x two_cells
  gf2::BitMatrix incidence10;                           // zero_cells x one_cells
  /// Euler characteristic of the hypermap the complex was built from.
  int source_euler = 0;

  friend bool operator==(const CellComplex &, const CellComplex &) = default;
};

/// Throws InvalidSpecialDartsError unless `s` is a valid per-edge set.
CellComplex reduce_to_surface(const Hypermap &h, const SpecialDarts &s);

/// |0-cells| - |1-cells| + |2-cells|.
int euler_characteristic(const CellComplex &c);

/// incidence21 reduced mod 2.
gf2::BitMatrix boundary2(const CellComplex &c);

/// |1-cells| - rank(incidence10) - rank(incidence21 mod 2).
std::size_t homology_dimension(const CellComplex &c);

/// The surface code read off the complex: hx = incidence10 and
/// hz = (incidence21 mod 2)^T, with faces naming the Z checks.
css::CssCode surface_code(const CellComplex &c);

struct SurfaceCheck {
  std::string name;
  bool passed = false;
  /// Counterexample or summary; 1-based labels.
  std::string detail;
};

struct SurfaceReport {
  std::vector<SurfaceCheck> checks;

  bool ok() const;
  std::string to_string() const;
};

/// Checks the complex is a closed surface cell structure:
///   shape            matrix dimensions agree with the cell lists
///   closed-surface   every 1-cell has incidence total exactly 2
///   endpoints        every 1-cell has 0 or 2 distinct endpoint vertices
///   chain-condition  incidence10 * (incidence21 mod 2) == 0
///   euler            chi equals the source hypermap's, and is even and <= 2
SurfaceReport validate_surface(const CellComplex &c);

}  // namespace hypercode::reduce

#endif  // HYPERCODE_REDUCE_HPP
