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

#ifndef HYPERCODE_VERIFY_HPP
#define HYPERCODE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercode/hypermap.hpp"

namespace hypercode::verify {

struct VerifyOptions {
  std::size_t trials = 500;
  std::size_t max_darts = 10;
  std::uint64_t seed = 7;
};

/// Random transitive hypermaps with 1 <= darts <= max_darts, drawn from a
/// single generator seeded with `seed`.
std::vector<Hypermap> corpus(const VerifyOptions &options);

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Hypermap file text of the first failing instance.
  std::optional<std::string> first_failure;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckTally> checks;
  /// How code-equality checks matched: literally or after generator re-sorting.
  std::size_t identical_matches = 0;
  std::size_t reordered_matches = 0;
  std::size_t total_darts = 0;

  bool ok() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every duality, code-equality and topology check on the corpus.
/// Check names:
///   dual_involution, triangle_dual_involution, contrary_involution,
///   triangle_faces_are_edges, triangle_edges_are_faces,
///   nabla_edges_are_dual_faces, nabla_faces_are_dual_edges,
///   nabla_is_triangle_dual_of_dual, face_code_equals_triangle_edge_code,
///   dual_face_code_equals_nabla_edge_code, euler_even, logicals_equal_genus,
///   full_code_gap, chain_conditions, closed_surface, surface_code_equivalence
VerifyReport run_verification(const VerifyOptions &options);

/// Checks for a single hypermap; name and outcome in the order above.
std::vector<std::pair<std::string, bool>> check_hypermap(const Hypermap &h,
                                                         std::size_t *identical = nullptr,
                                                         std::size_t *reordered = nullptr);

}  // namespace hypercode::verify

#endif  // HYPERCODE_VERIFY_HPP
