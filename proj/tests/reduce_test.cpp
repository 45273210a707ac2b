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

#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace hypercode;
using namespace hypercode::reduce;
using testing_support::worked_example;

TEST(reduce, worked_example_complex) {
  const CellComplex c = reduce_to_surface(worked_example(), testing_support::worked_example_special());
  EXPECT_EQ(c.zero_cells.size(), 2u);
  EXPECT_EQ(c.one_cells, (std::vector<Dart>{0, 2, 3, 5, 6, 7}));
  EXPECT_EQ(c.two_cells.size(), 4u);
  EXPECT_EQ(euler_characteristic(c), 0);
  EXPECT_EQ(c.source_euler, 0);
  EXPECT_EQ(homology_dimension(c), 2u);
  EXPECT_TRUE(validate_surface(c).ok()) << validate_surface(c).to_string();

  const css::CssCode code = surface_code(c);
  const css::CssCode face =
      css::assemble(chain::face_code(worked_example(), testing_support::worked_example_special()));
  EXPECT_EQ(code.hx, face.hx);
  EXPECT_EQ(code.hz, face.hz);
}

TEST(reduce, single_dart_is_a_point_on_a_sphere) {
  const CellComplex c = reduce_to_surface(testing_support::single_dart(),
                                          {SpecialKind::kPerEdge, {0}});
  EXPECT_TRUE(c.one_cells.empty());
  EXPECT_EQ(euler_characteristic(c), 2);
  EXPECT_EQ(homology_dimension(c), 0u);
  EXPECT_TRUE(validate_surface(c).ok());
}

TEST(reduce, random_hypermaps_give_closed_surfaces) {
  Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const Hypermap h = random_hypermap(1 + uniform_below(rng, 10), rng);
    const SpecialDarts s = default_special_darts(h, SpecialKind::kPerEdge);
    const CellComplex c = reduce_to_surface(h, s);
    const SurfaceReport report = validate_surface(c);
    EXPECT_TRUE(report.ok()) << report.to_string();
    EXPECT_EQ(euler_characteristic(c), euler_characteristic(h));
    const css::CssCode face = css::assemble(chain::face_code(h, s));
    EXPECT_EQ(homology_dimension(c), face.k);
    EXPECT_EQ(surface_code(c).k, face.k);
  }
}

TEST(reduce, corrupted_complex_names_the_bad_cell) {
  CellComplex c = reduce_to_surface(worked_example(), testing_support::worked_example_special());
  c.incidence21[1][0] += 1;
  const SurfaceReport report = validate_surface(c);
  EXPECT_FALSE(report.ok());
  bool found = false;
  for (const SurfaceCheck &check : report.checks) {
    if (check.name != "closed-surface") continue;
    found = true;
    EXPECT_FALSE(check.passed);
    EXPECT_EQ(check.detail, "1-cell 3 has incidence total 3");
  }
  EXPECT_TRUE(found);
}

TEST(reduce, euler_mismatch_is_reported) {
  CellComplex c = reduce_to_surface(worked_example(), testing_support::worked_example_special());
  c.source_euler = 2;
  EXPECT_FALSE(validate_surface(c).ok());
}
