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

#ifndef HYPERCODE_CHAIN_HPP
#define HYPERCODE_CHAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hypercode/gf2.hpp"
#include "hypercode/hypermap.hpp"

namespace hypercode::chain {

/// The unquotiented maps of a hypermap over GF(2):
///   d2   : faces -> darts, a face goes to the sum of its darts
///   d1   : darts -> vertices, dart i goes to v(i) + v(alpha^-1(i))
///   iota : edges -> darts, an edge goes to the sum of its darts
/// Each matrix has one column per element of its domain. Orbits are listed
/// by minimum dart and darts by label.
struct RawComplex {
  gf2::BitMatrix d2;    // darts x faces
  gf2::BitMatrix d1;    // vertices x darts
  gf2::BitMatrix iota;  // darts x edges
  std::vector<Cycle> vertex_axis;
  std::vector<Cycle> edge_axis;
  std::vector<Cycle> face_axis;
  std::vector<Dart> dart_axis;
};

RawComplex raw_complex(const Hypermap &h);

enum class CodeKind { kFace, kEdge, kFull };

std::string to_string(CodeKind kind);

/// A two-step chain complex over a quotient of the dart space, with basis
/// the non-special darts.
///
/// face: faces -> darts / iota(edges) -> vertices, one special dart per edge.
/// edge: edges -> darts / d2(faces)   -> vertices, one special dart per face.
/// full: faces -> darts               -> vertices, no quotient.
struct QuotientCode {
  CodeKind kind = CodeKind::kFace;
  /// Empty for kFull.
  SpecialDarts special;
  /// Non-special darts in increasing order; one qubit each.
  std::vector<Dart> qubit_labels;
  /// Orbits indexing the Z-generator axis (faces, or edges for kEdge).
  std::vector<Cycle> z_axis;
  /// Vertex orbits indexing the X-generator axis.
  std::vector<Cycle> x_axis;
  gf2::BitMatrix boundary2;  // qubits x Z-generators
  gf2::BitMatrix boundary1;  // X-generators x qubits

  friend bool operator==(const QuotientCode &, const QuotientCode &) = default;
};

/// Natural-number boundary counts for a quotient code: entry [q][g] counts
/// how many times qubit q occurs when generator g's dart sum is rewritten in
/// the non-special basis. Each special dart is replaced by the other darts of
/// its eliminating orbit (edge for face codes, face for edge codes). Reduced
/// mod 2 this is boundary2.
using Multiplicities = std::vector<std::vector<std::uint32_t>>;

Multiplicities boundary2_multiplicities(const Hypermap &h, const SpecialDarts &s);

/// Throws InvalidSpecialDartsError unless `s` is a valid per-edge set.
QuotientCode face_code(const Hypermap &h, const SpecialDarts &s);
/// Throws InvalidSpecialDartsError unless `s` is a valid per-face set.
QuotientCode edge_code(const Hypermap &h, const SpecialDarts &s);
QuotientCode full_code(const Hypermap &h);

/// How two codes compared. kReordered means the matrices agree only after
/// re-sorting generators by orbit content.
enum class CodeMatch { kIdentical, kReordered, kDifferent };

std::string to_string(CodeMatch match);

/// Compares the qubit labels and boundary matrices of two codes, first
/// literally and then after canonical re-sorting of both generator axes.
CodeMatch compare_codes(const QuotientCode &a, const QuotientCode &b);

}  // namespace hypercode::chain

#endif  // HYPERCODE_CHAIN_HPP
