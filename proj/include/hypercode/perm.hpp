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

#ifndef HYPERCODE_PERM_HPP
#define HYPERCODE_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypercode {

/// A dart label. Labels are 0-based internally; text formats are 1-based.
using Dart = std::uint32_t;

/// A bijection on {0, ..., n-1}. Position i of images() holds the image of i.
///
/// Products follow the left-to-right convention used for hypermaps:
/// compose(p, q) applies p first, then q.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of length >= 1.
  explicit Permutation(std::vector<Dart> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from 0-based cycles; unlisted labels are fixed.
  /// Throws std::invalid_argument on out-of-range or repeated labels.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Dart>> &cycles);

  std::size_t degree() const { return images_.size(); }
  Dart operator()(Dart i) const { return images_[i]; }
  std::span<const Dart> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;

 private:
  std::vector<Dart> images_;
};

/// p then q: result(i) == q(p(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);

Permutation inverse(const Permutation &p);

using Cycle = std::vector<Dart>;

/// Orbits of a single permutation in canonical form: every cycle starts at
/// its minimum label and cycles are sorted by that minimum. Fixed points are
/// kept as length-1 cycles.
struct CycleDecomposition {
  std::vector<Cycle> cycles;
  /// orbit_of[i] is the index in `cycles` of the cycle containing i.
  std::vector<std::size_t> orbit_of;

  std::size_t size() const { return cycles.size(); }

  friend bool operator==(const CycleDecomposition &,
                         const CycleDecomposition &) = default;
};

CycleDecomposition cycle_decomposition(const Permutation &p);

/// True when the two decompositions split the darts into the same blocks,
/// ignoring the cyclic order inside each block.
bool same_partition(const CycleDecomposition &a, const CycleDecomposition &b);

/// Connected classes of the relation generated by p and q, each sorted,
/// listed by minimum label. Throws std::invalid_argument on degree mismatch.
std::vector<std::vector<Dart>> orbit_components(const Permutation &p,
                                                const Permutation &q);

/// Whether <p, q> acts transitively on the darts.
bool is_transitive(const Permutation &p, const Permutation &q);

/// Error raised while reading cycle notation. `column` is 1-based within the
/// parsed text.
class CycleParseError : public std::runtime_error {
 public:
  CycleParseError(std::size_t column, const std::string &message)
      : std::runtime_error(message), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses 1-based cycle notation such as "(4 3 2 1)(5 7 8 6)". An empty
/// string or "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// 1-based canonical cycle notation, fixed points omitted. Identity is "()".
std::string format_cycles(const Permutation &p);

/// 1-based rendering of a single cycle, e.g. "(1 8)".
std::string format_cycle(const Cycle &cycle);

}  // namespace hypercode

#endif  // HYPERCODE_PERM_HPP
