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

#include "hypercode/hypermap.hpp"

#include <algorithm>
#include <numeric>

namespace hypercode {

namespace {

std::string describe_components(const std::vector<std::vector<Dart>> &components) {
  std::string out = "darts are not connected by <alpha, sigma>; components:";
  for (const auto &c : components) {
    out += " {";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += '}';
  }
  return out;
}

}  // namespace

NotTransitiveError::NotTransitiveError(std::vector<std::vector<Dart>> components)
    : std::invalid_argument(describe_components(components)),
      components_(std::move(components)) {}

Hypermap::Hypermap(Permutation alpha, Permutation sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  if (alpha_.degree() != sigma_.degree()) {
    throw std::invalid_argument("alpha has degree " + std::to_string(alpha_.degree()) +
                                " but sigma has degree " + std::to_string(sigma_.degree()));
  }
  auto components = orbit_components(alpha_, sigma_);
  if (components.size() != 1) throw NotTransitiveError(std::move(components));
  vertices_ = cycle_decomposition(sigma_);
  edges_ = cycle_decomposition(alpha_);
  faces_ = cycle_decomposition(compose(inverse(alpha_), sigma_));
}

int euler_characteristic(const Hypermap &h) {
  return static_cast<int>(h.vertices().size() + h.edges().size() + h.faces().size()) -
         static_cast<int>(h.darts());
}

int genus(const Hypermap &h) { return (2 - euler_characteristic(h)) / 2; }

Hypermap dual(const Hypermap &h) {
  Permutation alpha_inv = inverse(h.alpha());
  Permutation sigma = compose(alpha_inv, h.sigma());
  return Hypermap(std::move(alpha_inv), std::move(sigma));
}

Hypermap triangle_dual(const Hypermap &h) {
  Permutation sigma_inv = inverse(h.sigma());
  Permutation alpha = compose(sigma_inv, h.alpha());
  return Hypermap(std::move(alpha), std::move(sigma_inv));
}

Hypermap contrary(const Hypermap &h) { return Hypermap(h.sigma(), h.alpha()); }

Hypermap nabla(const Hypermap &h) { return contrary(triangle_dual(h)); }

bool check_nabla_identity(const Hypermap &h) {
  const Hypermap lhs = nabla(h);
  const Hypermap rhs = triangle_dual(dual(h));
  return same_partition(lhs.vertices(), rhs.vertices()) &&
         same_partition(lhs.edges(), rhs.edges()) &&
         same_partition(lhs.faces(), rhs.faces());
}

std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

Permutation random_permutation(std::size_t degree, Rng &rng) {
  std::vector<Dart> images(degree);
  std::iota(images.begin(), images.end(), Dart{0});
  for (std::size_t i = degree; i > 1; --i) {
    std::swap(images[i - 1], images[uniform_below(rng, i)]);
  }
  return Permutation(std::move(images));
}

std::optional<Hypermap> try_random_hypermap(std::size_t darts, Rng &rng) {
  Permutation alpha = random_permutation(darts, rng);
  Permutation sigma = random_permutation(darts, rng);
  if (!is_transitive(alpha, sigma)) return std::nullopt;
  return Hypermap(std::move(alpha), std::move(sigma));
}

Hypermap random_hypermap(std::size_t darts, Rng &rng) {
  if (darts == 0) throw std::invalid_argument("a hypermap needs at least one dart");
  for (;;) {
    if (auto h = try_random_hypermap(darts, rng)) return *std::move(h);
  }
}

Hypermap random_hypermap(std::size_t darts, std::uint64_t seed) {
  Rng rng(seed);
  return random_hypermap(darts, rng);
}

std::string to_string(SpecialKind kind) {
  return kind == SpecialKind::kPerEdge ? "per-edge" : "per-face";
}

namespace {

const CycleDecomposition &orbits_for(const Hypermap &h, SpecialKind kind) {
  return kind == SpecialKind::kPerEdge ? h.edges() : h.faces();
}

}  // namespace

SpecialDarts default_special_darts(const Hypermap &h, SpecialKind kind) {
  SpecialDarts s{kind, {}};
  for (const auto &orbit : orbits_for(h, kind).cycles) s.darts.push_back(orbit.front());
  return s;
}

std::optional<std::string> special_darts_problem(const Hypermap &h, const SpecialDarts &s) {
  const auto &orbits = orbits_for(h, s.kind);
  const char *noun = s.kind == SpecialKind::kPerEdge ? "edge" : "face";
  std::vector<int> hits(orbits.size(), 0);
  for (Dart d : s.darts) {
    if (d >= h.darts()) {
      return "special dart " + std::to_string(d + 1) + " exceeds dart count " +
             std::to_string(h.darts());
    }
    const std::size_t orbit = orbits.orbit_of[d];
    if (++hits[orbit] > 1) {
      return "more than one special dart on " + std::string(noun) + " " +
             format_cycle(orbits.cycles[orbit]);
    }
  }
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (hits[o] == 0) {
      return "no special dart on " + std::string(noun) + " " + format_cycle(orbits.cycles[o]);
    }
  }
  return std::nullopt;
}

SpecialDarts make_special_darts(const Hypermap &h, SpecialKind kind, std::vector<Dart> darts) {
  std::sort(darts.begin(), darts.end());
  SpecialDarts s{kind, std::move(darts)};
  if (auto problem = special_darts_problem(h, s)) throw InvalidSpecialDartsError(*problem);
  return s;
}

}  // namespace hypercode
