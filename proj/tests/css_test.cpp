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

#include "hypercode/css.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hypercode;
using namespace hypercode::css;
using testing_support::to_int;
using testing_support::worked_example;

namespace {

CssCode worked_example_code() {
  return assemble(chain::face_code(worked_example(), testing_support::worked_example_special()));
}

}  // namespace

TEST(css, worked_example_parameters) {
  const CssCode c = worked_example_code();
  EXPECT_EQ(c.n, 6u);
  EXPECT_EQ(c.k, 2u);
  EXPECT_EQ(c.hx.row_strings(), testing_support::kWorkedExampleHx);
  EXPECT_EQ(c.hz.row_strings(), testing_support::kWorkedExampleHz);
  EXPECT_EQ(c.x_check_names, (std::vector<std::string>{"v1", "v2"}));
  EXPECT_EQ(c.z_check_names, (std::vector<std::string>{"f1", "f2", "f3", "f4"}));
}

TEST(css, worked_example_stabilizers) {
  const std::vector<std::string> expected = {
      "X_v1 = X1 X3 X4 X6 X7 X8", "X_v2 = X1 X3 X4 X6 X7 X8", "Z_f1 = Z1 Z8",
      "Z_f2 = Z1 Z3 Z4 Z7",       "Z_f3 = Z3 Z6 Z7 Z8",       "Z_f4 = Z4 Z6",
  };
  EXPECT_EQ(stabilizer_strings(worked_example_code()), expected);
}

TEST(css, make_code_checks_commutation) {
  EXPECT_THROW(make_code(gf2::BitMatrix::from_rows({"11"}), gf2::BitMatrix::from_rows({"10"}),
                         {0, 1}, {"a"}, {"b"}),
               InvariantError);
  EXPECT_THROW(make_code(gf2::BitMatrix::from_rows({"11"}), gf2::BitMatrix::from_rows({"110"}),
                         {0, 1}, {"a"}, {"b"}),
               std::invalid_argument);
  const CssCode empty_check =
      make_code(gf2::BitMatrix::from_rows({"00"}), gf2::BitMatrix::from_rows({"11"}), {0, 1},
                {"a"}, {"b"});
  EXPECT_EQ(empty_check.k, 1u);
  EXPECT_EQ(stabilizer_strings(empty_check).front(), "X_a = I");
}

TEST(css, worked_example_distance_oracle_then_search) {
  const CssCode c = worked_example_code();
  const auto hx = to_int(c.hx), hz = to_int(c.hz);
  EXPECT_EQ(oracle::min_logical_weight(hz, hx, 6), 2u);
  EXPECT_EQ(oracle::min_logical_weight(hx, hz, 6), 2u);
  const auto x_counts = oracle::logical_weight_counts(hz, hx, 6);
  const auto z_counts = oracle::logical_weight_counts(hx, hz, 6);
  EXPECT_EQ(x_counts[2], 1u);
  EXPECT_EQ(z_counts[2], 13u);

  const DistanceResult d = distance(c);
  EXPECT_TRUE(d.has_logicals);
  EXPECT_EQ(d.x, (ClassDistance{2, true}));
  EXPECT_EQ(d.z, (ClassDistance{2, true}));
  EXPECT_EQ(d.d, (ClassDistance{2, true}));
}

TEST(css, distance_matches_enumeration) {
  Rng rng(51);
  int with_logicals = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Hypermap h = random_hypermap(1 + uniform_below(rng, 12), rng);
    const CssCode codes[] = {
        assemble(chain::face_code(h, default_special_darts(h, SpecialKind::kPerEdge))),
        assemble(chain::full_code(h)),
    };
    for (const CssCode &c : codes) {
      const DistanceResult d = distance(c, {.max_weight = c.n});
      EXPECT_EQ(d.has_logicals, c.k > 0);
      if (!d.has_logicals) continue;
      ++with_logicals;
      const auto hx = to_int(c.hx), hz = to_int(c.hz);
      EXPECT_EQ(d.x, (ClassDistance{oracle::min_logical_weight(hz, hx, c.n), true}));
      EXPECT_EQ(d.z, (ClassDistance{oracle::min_logical_weight(hx, hz, c.n), true}));
      EXPECT_EQ(d.d.weight, std::min(d.x.weight, d.z.weight));
    }
  }
  EXPECT_GT(with_logicals, 50);
}

TEST(css, no_logicals_for_sphere) {
  const CssCode c = assemble(chain::face_code(testing_support::single_dart(),
                                              {SpecialKind::kPerEdge, {0}}));
  EXPECT_EQ(c.n, 0u);
  EXPECT_EQ(c.k, 0u);
  EXPECT_FALSE(distance(c).has_logicals);
}

TEST(css, exhausted_budget_gives_lower_bound) {
  const DistanceResult d = distance(worked_example_code(), {.max_weight = 1});
  EXPECT_EQ(d.x, (ClassDistance{2, false}));
  EXPECT_EQ(d.d, (ClassDistance{2, false}));
  EXPECT_EQ(d.max_weight, 1u);
}

TEST(css, large_codes_are_refused) {
  const std::size_t n = 30;
  const CssCode c = make_code(gf2::BitMatrix(0, n), gf2::BitMatrix(0, n),
                              std::vector<Dart>(n, 0), {}, {});
  EXPECT_THROW(distance(c), DistanceLimitError);
  const DistanceResult d = distance(c, {.max_weight = 1, .allow_large = true});
  EXPECT_EQ(d.d, (ClassDistance{1, true}));
}
