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

#include "hypercode/chain.hpp"

#include <algorithm>
#include <utility>

namespace hypercode::chain {

namespace {

constexpr std::size_t kNoQubit = static_cast<std::size_t>(-1);

gf2::BitMatrix orbit_columns(const CycleDecomposition &orbits, std::size_t darts) {
  gf2::BitMatrix m(darts, orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (Dart d : orbits.cycles[o]) m.set(d, o);
  }
  return m;
}

// v(i) + v(alpha^-1(i)) for each listed dart; both endpoints cancel when equal.
gf2::BitMatrix vertex_boundary(const Hypermap &h, const std::vector<Dart> &darts) {
  const Permutation alpha_inv = inverse(h.alpha());
  gf2::BitMatrix m(h.vertices().size(), darts.size());
  for (std::size_t c = 0; c < darts.size(); ++c) {
    m.flip(h.vertex_of(darts[c]), c);
    m.flip(h.vertex_of(alpha_inv(darts[c])), c);
  }
  return m;
}

const CycleDecomposition &eliminating_orbits(const Hypermap &h, SpecialKind kind) {
  return kind == SpecialKind::kPerEdge ? h.edges() : h.faces();
}

const CycleDecomposition &generator_orbits(const Hypermap &h, SpecialKind kind) {
  return kind == SpecialKind::kPerEdge ? h.faces() : h.edges();
}

std::vector<std::size_t> qubit_index(std::size_t darts, const SpecialDarts &s,
                                     std::vector<Dart> *labels) {
  std::vector<std::size_t> index(darts, 0);
  for (Dart d : s.darts) index[d] = kNoQubit;
  std::size_t next = 0;
  for (Dart d = 0; d < darts; ++d) {
    if (index[d] == kNoQubit) continue;
    index[d] = next++;
    if (labels) labels->push_back(d);
  }
  return index;
}

void require_valid(const Hypermap &h, const SpecialDarts &s, SpecialKind expected) {
  if (s.kind != expected) {
    throw InvalidSpecialDartsError("expected " + to_string(expected) +
                                   " special darts, got " + to_string(s.kind));
  }
  if (auto problem = special_darts_problem(h, s)) throw InvalidSpecialDartsError(*problem);
}

QuotientCode quotient_code(const Hypermap &h, const SpecialDarts &s, CodeKind kind) {
  QuotientCode code;
  code.kind = kind;
  code.special = s;
  qubit_index(h.darts(), s, &code.qubit_labels);
  code.z_axis = generator_orbits(h, s.kind).cycles;
  code.x_axis = h.vertices().cycles;

  const Multiplicities counts = boundary2_multiplicities(h, s);
  code.boundary2 = gf2::BitMatrix(code.qubit_labels.size(), code.z_axis.size());
  for (std::size_t q = 0; q < counts.size(); ++q) {
    for (std::size_t g = 0; g < counts[q].size(); ++g) {
      if (counts[q][g] & 1u) code.boundary2.set(q, g);
    }
  }
  code.boundary1 = vertex_boundary(h, code.qubit_labels);
  return code;
}

// Sorted orbit content paired with the matching matrix line.
using Keyed = std::vector<std::pair<std::vector<Dart>, std::string>>;

Keyed keyed_lines(const std::vector<Cycle> &axis, const std::vector<std::string> &lines) {
  Keyed out;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    std::vector<Dart> key = axis[i];
    std::sort(key.begin(), key.end());
    out.emplace_back(std::move(key), i < lines.size() ? lines[i] : std::string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RawComplex raw_complex(const Hypermap &h) {
  RawComplex c;
  c.d2 = orbit_columns(h.faces(), h.darts());
  c.iota = orbit_columns(h.edges(), h.darts());
  c.dart_axis.resize(h.darts());
  for (Dart d = 0; d < h.darts(); ++d) c.dart_axis[d] = d;
  c.d1 = vertex_boundary(h, c.dart_axis);
  c.vertex_axis = h.vertices().cycles;
  c.edge_axis = h.edges().cycles;
  c.face_axis = h.faces().cycles;
  return c;
}

std::string to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::kFace:
      return "face";
    case CodeKind::kEdge:
      return "edge";
    case CodeKind::kFull:
      return "full";
  }
  return "unknown";
}

Multiplicities boundary2_multiplicities(const Hypermap &h, const SpecialDarts &s) {
  if (auto problem = special_darts_problem(h, s)) throw InvalidSpecialDartsError(*problem);
  std::vector<Dart> labels;
  const auto index = qubit_index(h.darts(), s, &labels);
  const auto &generators = generator_orbits(h, s.kind);
  const auto &eliminating = eliminating_orbits(h, s.kind);

  Multiplicities counts(labels.size(), std::vector<std::uint32_t>(generators.size(), 0));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (Dart d : generators.cycles[g]) {
      if (index[d] != kNoQubit) {
        ++counts[index[d]][g];
        continue;
      }
      // A special dart is congruent to the sum of the rest of its orbit.
      for (Dart other : eliminating.cycles[eliminating.orbit_of[d]]) {
        if (other != d) ++counts[index[other]][g];
      }
    }
  }
  return counts;
}

QuotientCode face_code(const Hypermap &h, const SpecialDarts &s) {
  require_valid(h, s, SpecialKind::kPerEdge);
  return quotient_code(h, s, CodeKind::kFace);
}

QuotientCode edge_code(const Hypermap &h, const SpecialDarts &s) {
  require_valid(h, s, SpecialKind::kPerFace);
  return quotient_code(h, s, CodeKind::kEdge);
}

QuotientCode full_code(const Hypermap &h) {
  const RawComplex raw = raw_complex(h);
  QuotientCode code;
  code.kind = CodeKind::kFull;
  code.qubit_labels = raw.dart_axis;
  code.z_axis = raw.face_axis;
  code.x_axis = raw.vertex_axis;
  code.boundary2 = raw.d2;
  code.boundary1 = raw.d1;
  return code;
}

std::string to_string(CodeMatch match) {
  switch (match) {
    case CodeMatch::kIdentical:
      return "identical";
    case CodeMatch::kReordered:
      return "reordered";
    case CodeMatch::kDifferent:
      return "different";
  }
  return "unknown";
}

CodeMatch compare_codes(const QuotientCode &a, const QuotientCode &b) {
  if (a.qubit_labels != b.qubit_labels) return CodeMatch::kDifferent;
  if (a.boundary1 == b.boundary1 && a.boundary2 == b.boundary2) return CodeMatch::kIdentical;
  if (a.boundary1.cols() != b.boundary1.cols() || a.boundary2.rows() != b.boundary2.rows()) {
    return CodeMatch::kDifferent;
  }
  const bool z_match =
      keyed_lines(a.z_axis, gf2::transpose(a.boundary2).row_strings()) ==
      keyed_lines(b.z_axis, gf2::transpose(b.boundary2).row_strings());
  const bool x_match = keyed_lines(a.x_axis, a.boundary1.row_strings()) ==
                       keyed_lines(b.x_axis, b.boundary1.row_strings());
  return z_match && x_match ? CodeMatch::kReordered : CodeMatch::kDifferent;
}

}  // namespace hypercode::chain
