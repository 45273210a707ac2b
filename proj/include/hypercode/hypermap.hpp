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

#ifndef HYPERCODE_HYPERMAP_HPP
#define HYPERCODE_HYPERMAP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercode/perm.hpp"

namespace hypercode {

/// Raised when <alpha, sigma> does not act transitively on the darts.
class NotTransitiveError : public std::invalid_argument {
 public:
  explicit NotTransitiveError(std::vector<std::vector<Dart>> components);
  /// Connected classes of darts, 0-based, sorted by minimum label.
  const std::vector<std::vector<Dart>> &components() const { return components_; }

 private:
  std::vector<std::vector<Dart>> components_;
};

/// A combinatorial hypermap (alpha, sigma) on darts {0, ..., n-1}.
///
/// Vertices are the orbits of sigma, edges the orbits of alpha and faces the
/// orbits of alpha^-1 sigma (alpha^-1 first, then sigma). All three
/// decompositions are computed at construction and the object is immutable.
class Hypermap {
 public:
  /// Throws std::invalid_argument on degree mismatch and NotTransitiveError
  /// when the pair is not transitive.
  Hypermap(Permutation alpha, Permutation sigma);

  const Permutation &alpha() const { return alpha_; }
  const Permutation &sigma() const { return sigma_; }
  std::size_t darts() const { return alpha_.degree(); }

  const CycleDecomposition &vertices() const { return vertices_; }
  const CycleDecomposition &edges() const { return edges_; }
  const CycleDecomposition &faces() const { return faces_; }

  std::size_t vertex_of(Dart i) const { return vertices_.orbit_of[i]; }
  std::size_t edge_of(Dart i) const { return edges_.orbit_of[i]; }
  std::size_t face_of(Dart i) const { return faces_.orbit_of[i]; }

  /// Equality of the underlying permutation pair.
  friend bool operator==(const Hypermap &a, const Hypermap &b) {
    return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_;
  }

 private:
  Permutation alpha_;
  Permutation sigma_;
  CycleDecomposition vertices_;
  CycleDecomposition edges_;
  CycleDecomposition faces_;
};

/// chi = (|V| + |E|) - n + |F|, counted on the bipartite vertex/edge graph
/// whose links are the darts.
int euler_characteristic(const Hypermap &h);
int genus(const Hypermap &h);

/// H* = (alpha^-1, alpha^-1 sigma). Shares edges with h; vertices and faces swap.
Hypermap dual(const Hypermap &h);
/// H^ = (sigma^-1 alpha, sigma^-1). Shares vertices with h; edges and faces swap.
Hypermap triangle_dual(const Hypermap &h);
/// The pair with alpha and sigma interchanged.
Hypermap contrary(const Hypermap &h);
/// contrary(triangle_dual(h)) = (sigma^-1, sigma^-1 alpha).
Hypermap nabla(const Hypermap &h);

/// Whether contrary(triangle_dual(h)) and triangle_dual(dual(h)) have the
/// same vertex, edge and face partitions.
bool check_nabla_identity(const Hypermap &h);

/// Deterministic 64-bit generator used for all random constructions. The
/// bounded draw below avoids std::uniform_int_distribution so output does not
/// depend on the standard library implementation.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound);

/// Uniform permutation of the given degree (Fisher-Yates).
Permutation random_permutation(std::size_t degree, Rng &rng);

/// One draw of a uniform (alpha, sigma) pair; empty when not transitive.
std::optional<Hypermap> try_random_hypermap(std::size_t darts, Rng &rng);

/// Rejection-samples uniform pairs until transitive. Requires darts >= 1.
Hypermap random_hypermap(std::size_t darts, Rng &rng);
Hypermap random_hypermap(std::size_t darts, std::uint64_t seed);

enum class SpecialKind { kPerEdge, kPerFace };

std::string to_string(SpecialKind kind);

/// One chosen dart per edge (face codes) or per face (edge codes), sorted.
struct SpecialDarts {
  SpecialKind kind = SpecialKind::kPerEdge;
  std::vector<Dart> darts;

  friend bool operator==(const SpecialDarts &, const SpecialDarts &) = default;
};

class InvalidSpecialDartsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The minimum label of each edge (per-edge) or face (per-face) orbit.
SpecialDarts default_special_darts(const Hypermap &h, SpecialKind kind);

/// Validates and sorts an explicit choice. Throws InvalidSpecialDartsError
/// with a description naming the offending orbit or dart.
SpecialDarts make_special_darts(const Hypermap &h, SpecialKind kind, std::vector<Dart> darts);

/// Empty when `s` holds exactly one dart of every orbit of its kind,
/// otherwise a description of the first problem found.
std::optional<std::string> special_darts_problem(const Hypermap &h, const SpecialDarts &s);

}  // namespace hypercode

#endif  // HYPERCODE_HYPERMAP_HPP
