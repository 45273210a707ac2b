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

#ifndef HYPERCODE_CSS_HPP
#define HYPERCODE_CSS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercode/chain.hpp"
#include "hypercode/gf2.hpp"

namespace hypercode::css {

/// Minimum logical weight for one Pauli type. When `exact` is false the
/// search budget ran out and `weight` is a lower bound.
struct ClassDistance {
  std::size_t weight = 0;
  bool exact = false;

  friend bool operator==(const ClassDistance &, const ClassDistance &) = default;
};

struct DistanceResult {
  /// False for k == 0; the class distances are then meaningless.
  bool has_logicals = false;
  /// Logical X: in ker(hz), outside rowspace(hx).
  ClassDistance x;
  /// Logical Z: in ker(hx), outside rowspace(hz).
  ClassDistance z;
  ClassDistance d;
  std::size_t max_weight = 0;

  friend bool operator==(const DistanceResult &, const DistanceResult &) = default;
};

struct CssCode {
  gf2::BitMatrix hx;  // X checks x qubits
  gf2::BitMatrix hz;  // Z checks x qubits
  /// 0-based dart label of each qubit column.
  std::vector<Dart> qubit_labels;
  /// Display names of the check rows, e.g. "v1" or "f3".
  std::vector<std::string> x_check_names;
  std::vector<std::string> z_check_names;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<DistanceResult> distance;

  friend bool operator==(const CssCode &, const CssCode &) = default;
};

/// Raised when a code's checks fail to commute.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds a code from explicit check matrices. k = n - rank(hx) - rank(hz).
/// Throws std::invalid_argument on shape mismatch and InvariantError when
/// hx hz^T != 0.
CssCode make_code(gf2::BitMatrix hx, gf2::BitMatrix hz, std::vector<Dart> qubit_labels,
                  std::vector<std::string> x_check_names,
                  std::vector<std::string> z_check_names);

/// hx = boundary1, hz = boundary2^T. Vertices name the X checks; faces or
/// edges name the Z checks.
CssCode assemble(const chain::QuotientCode &q);

/// One line per check row, e.g. "X_v1 = X1 X3 X4 X6 X7 X8". Qubits are named
/// by 1-based dart label. A check with empty support renders as "I".
std::vector<std::string> stabilizer_strings(const CssCode &c);

struct DistanceOptions {
  /// Largest logical weight searched before settling for a lower bound.
  std::size_t max_weight = 6;
  /// Codes with more qubits are refused unless allow_large is set.
  std::size_t max_qubits = 28;
  bool allow_large = false;
};

class DistanceLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimum-weight logical search. For each type, kernel vectors are
/// enumerated through their coordinates on the free columns of the kernel
/// basis, by increasing free weight; every kernel vector of weight w has
/// free weight at most w, so once all free patterns up to weight w are seen,
/// any logical of weight <= w has been found.
DistanceResult distance(const CssCode &c, const DistanceOptions &options = {});

}  // namespace hypercode::css

#endif  // HYPERCODE_CSS_HPP
