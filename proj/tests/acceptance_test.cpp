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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypercode/chain.hpp"
#include "hypercode/cli.hpp"
#include "hypercode/css.hpp"
#include "hypercode/gf2.hpp"
#include "hypercode/hypermap.hpp"
#include "hypercode/io.hpp"
#include "hypercode/reduce.hpp"
#include "hypercode/verify.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hypercode;

namespace {

constexpr std::size_t kTrials = 500;
constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string &what) {
    if (condition || !passed) {
      passed = passed && condition;
      return;
    }
    passed = false;
    detail = what;
  }
};

const std::vector<Hypermap> &corpus() {
  static const std::vector<Hypermap> hypermaps =
      verify::corpus({.trials = kTrials, .max_darts = 10, .seed = kSeed});
  return hypermaps;
}

std::string blocks(const CycleDecomposition &d) {
  std::ostringstream out;
  for (const auto &b : testing_support::sorted_blocks(d)) {
    out << '(';
    for (auto x : b) out << x << ' ';
    out << ')';
  }
  return out.str();
}

Outcome worked_example_reproduction() {
  Outcome o;
  const Hypermap h = testing_support::worked_example();
  o.require(format_cycles(compose(inverse(h.alpha()), h.sigma())) == "(1 8)(2 7)(3 5)(4 6)",
            "faces");
  const css::CssCode c =
      css::assemble(chain::face_code(h, testing_support::worked_example_special()));
  o.require(c.hx.row_strings() == testing_support::kWorkedExampleHx, "H_X");
  o.require(c.hz.row_strings() == testing_support::kWorkedExampleHz, "H_Z");
  const std::vector<std::string> generators = {
      "X_v1 = X1 X3 X4 X6 X7 X8", "X_v2 = X1 X3 X4 X6 X7 X8", "Z_f1 = Z1 Z8",
      "Z_f2 = Z1 Z3 Z4 Z7",       "Z_f3 = Z3 Z6 Z7 Z8",       "Z_f4 = Z4 Z6"};
  o.require(css::stabilizer_strings(c) == generators, "generators");
  o.require(c.k == 2, "k = " + std::to_string(c.k));
  return o;
}

Outcome worked_example_distance() {
  Outcome o;
  const css::CssCode c = css::assemble(
      chain::face_code(testing_support::worked_example(), testing_support::worked_example_special()));
  const auto hx = testing_support::to_int(c.hx), hz = testing_support::to_int(c.hz);
  const std::size_t oracle_x = oracle::min_logical_weight(hz, hx, c.n);
  const std::size_t oracle_z = oracle::min_logical_weight(hx, hz, c.n);
  o.require(oracle_x == 2 && oracle_z == 2, "oracle d_X/d_Z");
  const css::DistanceResult d = css::distance(c);
  o.require(d.has_logicals, "no logicals");
  o.require(d.x == css::ClassDistance{oracle_x, true}, "d_X");
  o.require(d.z == css::ClassDistance{oracle_z, true}, "d_Z");
  o.require(d.d == css::ClassDistance{2, true}, "d");
  return o;
}

Outcome involutions_and_identities() {
  Outcome o;
  for (const Hypermap &h : corpus()) {
    const Hypermap d = dual(h), t = triangle_dual(h), n = nabla(h);
    const std::string at = io::format_hypermap_file(h);
    o.require(dual(d) == h, "dual involution at\n" + at);
    o.require(triangle_dual(t) == h, "triangle-dual involution at\n" + at);
    o.require(blocks(t.faces()) == blocks(h.edges()), "faces(tri) != edges at\n" + at);
    o.require(blocks(t.edges()) == blocks(h.faces()), "edges(tri) != faces at\n" + at);
    o.require(blocks(n.edges()) == blocks(d.faces()), "edges(nabla) != faces(dual) at\n" + at);
    o.require(blocks(n.faces()) == blocks(d.edges()), "faces(nabla) != edges(dual) at\n" + at);
    o.require(check_nabla_identity(h), "nabla identity at\n" + at);
  }
  return o;
}

Outcome code_equality() {
  Outcome o;
  for (const Hypermap &h : corpus()) {
    const SpecialDarts s = default_special_darts(h, SpecialKind::kPerEdge);
    const SpecialDarts s_face{SpecialKind::kPerFace, s.darts};
    const std::string at = io::format_hypermap_file(h);
    const chain::QuotientCode a = chain::face_code(h, s);
    const chain::QuotientCode b = chain::edge_code(triangle_dual(h), s_face);
    o.require(a.boundary1 == b.boundary1 && a.boundary2 == b.boundary2,
              "face code != triangle-dual edge code at\n" + at);
    const chain::QuotientCode c = chain::face_code(dual(h), s);
    const chain::QuotientCode e = chain::edge_code(contrary(triangle_dual(h)), s_face);
    o.require(chain::compare_codes(c, e) != chain::CodeMatch::kDifferent,
              "dual face code != nabla edge code at\n" + at);
  }
  return o;
}

Outcome topology() {
  Outcome o;
  for (const Hypermap &h : corpus()) {
    const std::string at = io::format_hypermap_file(h);
    const int chi = euler_characteristic(h);
    const SpecialDarts s = default_special_darts(h, SpecialKind::kPerEdge);
    const css::CssCode face = css::assemble(chain::face_code(h, s));
    const css::CssCode full = css::assemble(chain::full_code(h));
    o.require(chi % 2 == 0, "odd euler characteristic at\n" + at);
    o.require(static_cast<int>(face.k) == 2 - chi, "k != 2 - chi at\n" + at);
    o.require(full.k == face.k + h.edges().size() - 1, "k_full gap at\n" + at);
    const reduce::CellComplex cx = reduce::reduce_to_surface(h, s);
    const reduce::SurfaceReport report = reduce::validate_surface(cx);
    o.require(report.ok(), report.to_string() + "at\n" + at);
    o.require(reduce::euler_characteristic(cx) == chi, "complex euler at\n" + at);
  }
  return o;
}

Outcome chain_conditions() {
  Outcome o;
  for (const Hypermap &h : corpus()) {
    const std::string at = io::format_hypermap_file(h);
    const chain::RawComplex raw = chain::raw_complex(h);
    o.require(gf2::multiply(raw.d1, raw.d2).is_zero(), "d1 d2 at\n" + at);
    o.require(gf2::multiply(raw.d1, raw.iota).is_zero(), "d1 iota at\n" + at);
    const chain::QuotientCode codes[] = {
        chain::face_code(h, default_special_darts(h, SpecialKind::kPerEdge)),
        chain::edge_code(h, default_special_darts(h, SpecialKind::kPerFace)),
        chain::full_code(h),
    };
    for (const auto &q : codes) {
      o.require(gf2::multiply(q.boundary1, q.boundary2).is_zero(),
                chain::to_string(q.kind) + " boundary at\n" + at);
    }
  }
  return o;
}

Outcome gf2_oracle() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
    const auto m = oracle::random_matrix(rows, cols, rng);
    const gf2::BitMatrix bits = testing_support::to_bits(m, cols);
    const std::string at = " on trial " + std::to_string(trial);
    o.require(gf2::rank(bits) == oracle::rank(m), "rank" + at);
    o.require(oracle::span(testing_support::to_int(gf2::kernel_basis(bits))) ==
                  oracle::kernel(m, cols),
              "kernel" + at);
    const auto space = oracle::span(m);
    const gf2::RowSpace row_space(bits);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << cols); ++v) {
      o.require(row_space.contains(testing_support::to_bits(v, cols)) == (space.count(v) > 0),
                "row-space membership" + at);
    }
  }
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string file = HYPERCODE_DATA_DIR "/worked_example.hm";
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--trials", "500", "--seed", "7"},
      {"verify", "--trials", "500", "--seed", "7", "--format", "json"},
      {"export", file, "--format", "dot"},
      {"export", file, "--format", "json"},
      {"code", file, "--kind", "face", "--format", "json"},
      {"code", file, "--kind", "edge", "--special", "1 2 3 4", "--format", "json"},
      {"code", file, "--kind", "full", "--format", "json"},
      {"reduce", file},
  };
  std::vector<std::string> outputs;
  for (const auto &args : commands) {
    std::string runs[2];
    for (auto &text : runs) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      o.require(code == cli::kSuccess, args.front() + " exited " + std::to_string(code) + ": " +
                                           err.str());
      text = out.str();
    }
    o.require(runs[0] == runs[1], args.front() + " output differs between runs");
    outputs.push_back(runs[0]);
  }
  if (!o.passed) return o;

  const Hypermap h = testing_support::worked_example();
  o.require(io::parse_hypermap_json(outputs[3]) == h, "hypermap JSON round trip");
  for (std::size_t i = 4; i < 7; ++i) {
    const css::CssCode c = io::parse_code_json(outputs[i]);
    o.require(io::export_json(c) == io::export_json(io::parse_code_json(io::export_json(c))),
              "code JSON round trip");
    o.require(nlohmann::json::parse(outputs[i])["hx"] == nlohmann::json::parse(io::export_json(c))["hx"],
              "code JSON hx");
  }
  const reduce::CellComplex cx = io::parse_complex_json(outputs[7]);
  o.require(cx == reduce::reduce_to_surface(h, testing_support::worked_example_special()),
            "complex JSON round trip");
  return o;
}

struct Criterion {
  const char *name;
  std::function<Outcome()> run;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"worked-example reproduction", worked_example_reproduction, 1.0},
      {"worked-example distance", worked_example_distance, 1.0},
      {"involutions and identities", involutions_and_identities, 30.0},
      {"face/edge code equality", code_equality, 0.0},
      {"homology and topology", topology, 0.0},
      {"chain conditions", chain_conditions, 0.0},
      {"gf2 oracle equivalence", gf2_oracle, 0.0},
      {"cli determinism and round trip", cli_determinism, 0.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[i].run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0 && seconds >= criteria[i].limit_seconds) {
      o.require(false, "took " + std::to_string(seconds) + " s");
    }
    std::printf("%s %zu %s (%.3f s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name,
                seconds);
    if (!o.passed) {
      std::printf("  %s\n", o.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
