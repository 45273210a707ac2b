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

#include "hypercode/verify.hpp"

#include <iomanip>
#include <sstream>

#include "hypercode/chain.hpp"
#include "hypercode/css.hpp"
#include "hypercode/io.hpp"
#include "hypercode/reduce.hpp"
#include "json.hpp"

namespace hypercode::verify {

std::vector<Hypermap> corpus(const VerifyOptions &options) {
  Rng rng(options.seed);
  std::vector<Hypermap> out;
  out.reserve(options.trials);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t darts = 1 + uniform_below(rng, options.max_darts);
    out.push_back(random_hypermap(darts, rng));
  }
  return out;
}

namespace {

SpecialDarts as_kind(SpecialDarts s, SpecialKind kind) {
  s.kind = kind;
  return s;
}

bool code_match(const chain::QuotientCode &a, const chain::QuotientCode &b,
                std::size_t *identical, std::size_t *reordered) {
  switch (chain::compare_codes(a, b)) {
    case chain::CodeMatch::kIdentical:
      if (identical) ++*identical;
      return true;
    case chain::CodeMatch::kReordered:
      if (reordered) ++*reordered;
      return true;
    case chain::CodeMatch::kDifferent:
      return false;
  }
  return false;
}

bool chain_ok(const chain::QuotientCode &q) {
  return gf2::multiply(q.boundary1, q.boundary2).is_zero();
}

}  // namespace

std::vector<std::pair<std::string, bool>> check_hypermap(const Hypermap &h,
                                                         std::size_t *identical,
                                                         std::size_t *reordered) {
  std::vector<std::pair<std::string, bool>> out;
  const Hypermap star = dual(h);
  const Hypermap tri = triangle_dual(h);
  const Hypermap nab = nabla(h);

  out.emplace_back("dual_involution", dual(star) == h);
  out.emplace_back("triangle_dual_involution", triangle_dual(tri) == h);
  out.emplace_back("contrary_involution", contrary(contrary(h)) == h);
  out.emplace_back("triangle_faces_are_edges", same_partition(tri.faces(), h.edges()));
  out.emplace_back("triangle_edges_are_faces", same_partition(tri.edges(), h.faces()));
  out.emplace_back("nabla_edges_are_dual_faces", same_partition(nab.edges(), star.faces()));
  out.emplace_back("nabla_faces_are_dual_edges", same_partition(nab.faces(), star.edges()));
  out.emplace_back("nabla_is_triangle_dual_of_dual", check_nabla_identity(h));

  const SpecialDarts s = default_special_darts(h, SpecialKind::kPerEdge);
  const chain::QuotientCode face = chain::face_code(h, s);
  const chain::QuotientCode tri_edge = chain::edge_code(tri, as_kind(s, SpecialKind::kPerFace));
  out.emplace_back("face_code_equals_triangle_edge_code",
                   code_match(face, tri_edge, identical, reordered));

  const SpecialDarts s_star = default_special_darts(star, SpecialKind::kPerEdge);
  const chain::QuotientCode star_face = chain::face_code(star, s_star);
  const chain::QuotientCode nabla_edge =
      chain::edge_code(nab, as_kind(s_star, SpecialKind::kPerFace));
  out.emplace_back("dual_face_code_equals_nabla_edge_code",
                   code_match(star_face, nabla_edge, identical, reordered));

  const int chi = euler_characteristic(h);
  out.emplace_back("euler_even", chi % 2 == 0 && chi <= 2 &&
                                     euler_characteristic(star) == chi &&
                                     euler_characteristic(tri) == chi);

  const css::CssCode face_css = css::assemble(face);
  const css::CssCode edge_css =
      css::assemble(chain::edge_code(h, default_special_darts(h, SpecialKind::kPerFace)));
  out.emplace_back("logicals_equal_genus",
                   static_cast<int>(face_css.k) == 2 - chi &&
                       static_cast<int>(edge_css.k) == 2 - chi);

  const chain::QuotientCode full = chain::full_code(h);
  const css::CssCode full_css = css::assemble(full);
  out.emplace_back("full_code_gap", full_css.k + 1 == face_css.k + h.edges().size());

  const chain::RawComplex raw = chain::raw_complex(h);
  out.emplace_back("chain_conditions", gf2::multiply(raw.d1, raw.d2).is_zero() &&
                                           gf2::multiply(raw.d1, raw.iota).is_zero() &&
                                           chain_ok(face) && chain_ok(tri_edge) &&
                                           chain_ok(star_face) && chain_ok(nabla_edge) &&
                                           chain_ok(full));

  const reduce::CellComplex cells = reduce::reduce_to_surface(h, s);
  out.emplace_back("closed_surface", reduce::validate_surface(cells).ok() &&
                                         reduce::euler_characteristic(cells) == chi);

  const css::CssCode surface = reduce::surface_code(cells);
  out.emplace_back("surface_code_equivalence",
                   surface.hx == face_css.hx && surface.hz == face_css.hz &&
                       reduce::homology_dimension(cells) == face_css.k);
  return out;
}

VerifyReport run_verification(const VerifyOptions &options) {
  VerifyReport report;
  report.options = options;
  for (const Hypermap &h : corpus(options)) {
    report.total_darts += h.darts();
    const auto results = check_hypermap(h, &report.identical_matches, &report.reordered_matches);
    if (report.checks.empty()) {
      for (const auto &[name, _] : results) report.checks.push_back({name, 0, 0, std::nullopt});
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      CheckTally &tally = report.checks[i];
      if (results[i].second) {
        ++tally.passed;
      } else {
        ++tally.failed;
        if (!tally.first_failure) tally.first_failure = io::format_hypermap_file(h);
      }
    }
  }
  return report;
}

bool VerifyReport::ok() const {
  for (const auto &c : checks) {
    if (c.failed) return false;
  }
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "trials: " << options.trials << "\n";
  out << "max-darts: " << options.max_darts << "\n";
  out << "seed: " << options.seed << "\n";
  out << "total darts: " << total_darts << "\n";
  out << std::left << std::setw(40) << "check" << std::right << std::setw(8) << "passed"
      << std::setw(8) << "failed" << "\n";
  for (const auto &c : checks) {
    out << std::left << std::setw(40) << c.name << std::right << std::setw(8) << c.passed
        << std::setw(8) << c.failed << "\n";
  }
  out << "code equality: identical " << identical_matches << ", reordered " << reordered_matches
      << "\n";
  for (const auto &c : checks) {
    if (c.first_failure) out << "first failure of " << c.name << ":\n" << *c.first_failure;
  }
  out << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = io::kFormatVersion;
  j["type"] = "verify_report";
  j["trials"] = options.trials;
  j["max_darts"] = options.max_darts;
  j["seed"] = options.seed;
  j["total_darts"] = total_darts;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto &c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["failed"] = c.failed;
    if (c.first_failure) entry["first_failure"] = *c.first_failure;
    j["checks"].push_back(std::move(entry));
  }
  j["code_equality"] = {{"identical", identical_matches}, {"reordered", reordered_matches}};
  j["ok"] = ok();
  return j.dump(2) + "\n";
}

}  // namespace hypercode::verify
