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

#include "hypercode/perm.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hypercode;
using testing_support::images_of;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64 &rng) {
  return Permutation(oracle::random_images(n, rng));
}

}  // namespace

TEST(perm, rejects_non_bijections) {
  EXPECT_THROW(Permutation(std::vector<Dart>{0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<Dart>{0, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<Dart>{}), std::invalid_argument);
}

TEST(perm, worked_example_face_permutation) {
  const Permutation alpha = parse_cycles("(4 3 2 1)(5 7 8 6)", 8);
  const Permutation sigma = parse_cycles("(7 1 6 3)(5 2 8 4)", 8);
  const Permutation faces = compose(inverse(alpha), sigma);
  EXPECT_EQ(faces, parse_cycles("(1 8)(2 7)(3 5)(4 6)", 8));
  // 1 -> 8 because sigma(alpha^-1(1)) = sigma(2) = 8.
  EXPECT_EQ(faces(0), 7u);
  EXPECT_EQ(format_cycles(faces), "(1 8)(2 7)(3 5)(4 6)");
}

TEST(perm, inverse_of_worked_example_alpha) {
  const Permutation alpha = parse_cycles("(4 3 2 1)", 4);
  EXPECT_EQ(alpha(1), 0u);  // alpha(2) = 1
  EXPECT_EQ(inverse(alpha)(0), 1u);
  EXPECT_TRUE(inverse(Permutation::identity(5)).is_identity());
}

TEST(perm, compose_with_identity) {
  std::mt19937_64 rng(11);
  const Permutation q = random_perm(7, rng);
  EXPECT_EQ(compose(Permutation::identity(7), q), q);
  EXPECT_EQ(compose(q, Permutation::identity(7)), q);
}

TEST(perm, compose_degree_mismatch) {
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)),
               std::invalid_argument);
  EXPECT_THROW(is_transitive(Permutation::identity(2), Permutation::identity(3)),
               std::invalid_argument);
}

TEST(perm, compose_matches_naive_oracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Permutation p = random_perm(n, rng);
    const Permutation q = random_perm(n, rng);
    EXPECT_EQ(images_of(compose(p, q)), oracle::compose(images_of(p), images_of(q)));
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_EQ(images_of(inverse(p)), oracle::invert(images_of(p)));
  }
}

TEST(perm, inverse_is_involution) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = random_perm(1 + rng() % 12, rng);
    EXPECT_EQ(images_of(inverse(inverse(p))), images_of(p));
  }
}

TEST(perm, composition_is_associative) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(perm, cycle_decomposition_canonical_form) {
  const Permutation faces = parse_cycles("(1 8)(2 7)(3 5)(4 6)", 8);
  const CycleDecomposition d = cycle_decomposition(faces);
  const std::vector<Cycle> expected = {{0, 7}, {1, 6}, {2, 4}, {3, 5}};
  EXPECT_EQ(d.cycles, expected);

  const std::vector<Cycle> fixed = {{0}, {1}, {2}};
  EXPECT_EQ(cycle_decomposition(Permutation::identity(3)).cycles, fixed);

  // Rotated to the minimum even when written from elsewhere.
  EXPECT_EQ(cycle_decomposition(parse_cycles("(4 3 2 1)", 4)).cycles,
            (std::vector<Cycle>{{0, 3, 2, 1}}));
}

TEST(perm, cycle_decomposition_properties) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation p = random_perm(1 + rng() % 12, rng);
    const CycleDecomposition d = cycle_decomposition(p);
    EXPECT_EQ(d, cycle_decomposition(p));

    std::vector<int> seen(p.degree(), 0);
    Dart previous_min = 0;
    for (std::size_t c = 0; c < d.cycles.size(); ++c) {
      const Cycle &cycle = d.cycles[c];
      ASSERT_FALSE(cycle.empty());
      EXPECT_EQ(cycle.front(), *std::min_element(cycle.begin(), cycle.end()));
      if (c) EXPECT_GT(cycle.front(), previous_min);
      previous_min = cycle.front();
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        ++seen[cycle[i]];
        EXPECT_EQ(p(cycle[i]), cycle[(i + 1) % cycle.size()]);
        EXPECT_EQ(d.orbit_of[cycle[i]], c);
      }
    }
    for (int s : seen) EXPECT_EQ(s, 1);
    EXPECT_EQ(Permutation::from_cycles(p.degree(), d.cycles), p);
    EXPECT_EQ(testing_support::sorted_blocks(d), oracle::orbit_sets(images_of(p)));
  }
}

TEST(perm, transitivity_examples) {
  const Permutation alpha = parse_cycles("(4 3 2 1)(5 7 8 6)", 8);
  const Permutation sigma = parse_cycles("(7 1 6 3)(5 2 8 4)", 8);
  EXPECT_TRUE(is_transitive(alpha, sigma));
  EXPECT_FALSE(is_transitive(Permutation::identity(2), Permutation::identity(2)));
  EXPECT_TRUE(is_transitive(Permutation::identity(1), Permutation::identity(1)));
  const auto components = orbit_components(Permutation::identity(2), Permutation::identity(2));
  EXPECT_EQ(components, (std::vector<std::vector<Dart>>{{0}, {1}}));
}

TEST(perm, transitivity_matches_bfs_oracle) {
  std::mt19937_64 rng(5);
  int transitive = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    // Sparse permutations so both outcomes are common.
    const Permutation p = trial % 2 || n == 1
                              ? random_perm(n, rng)
                              : Permutation::from_cycles(n, {{0, static_cast<Dart>(n - 1)}});
    const Permutation q = random_perm(n, rng);
    const bool expected = oracle::transitive(images_of(p), images_of(q));
    transitive += expected;
    EXPECT_EQ(is_transitive(p, q), expected);
    EXPECT_EQ(is_transitive(q, p), expected);
    EXPECT_EQ(is_transitive(inverse(p), q), expected);
    EXPECT_EQ(is_transitive(p, inverse(q)), expected);
  }
  EXPECT_GT(transitive, 50);
  EXPECT_LT(transitive, 450);
}

TEST(perm, parse_errors_report_columns) {
  try {
    parse_cycles("(1 2)(2 3)", 3);
    FAIL() << "duplicate label accepted";
  } catch (const CycleParseError &e) {
    EXPECT_EQ(e.column(), 7u);
  }
  try {
    parse_cycles("(1 9)", 4);
    FAIL() << "out-of-range label accepted";
  } catch (const CycleParseError &e) {
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_cycles("(1 2", 3), CycleParseError);
  EXPECT_THROW(parse_cycles("1 2)", 3), CycleParseError);
  EXPECT_THROW(parse_cycles("((1 2))", 3), CycleParseError);
  EXPECT_THROW(parse_cycles("(0 1)", 3), CycleParseError);
  EXPECT_THROW(parse_cycles("(1,2)", 3), CycleParseError);
}

TEST(perm, parse_identity_forms) {
  EXPECT_TRUE(parse_cycles("", 4).is_identity());
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
  EXPECT_TRUE(parse_cycles("(3)", 4).is_identity());
  EXPECT_EQ(format_cycles(Permutation::identity(4)), "()");
}

TEST(perm, format_parse_round_trip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation p = random_perm(1 + rng() % 12, rng);
    EXPECT_EQ(parse_cycles(format_cycles(p), p.degree()), p);
  }
}
