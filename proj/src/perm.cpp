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

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hypercode {

Permutation::Permutation(std::vector<Dart> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("permutation degree must be at least 1");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Dart image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Dart> images(degree);
  std::iota(images.begin(), images.end(), Dart{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Dart>> &cycles) {
  std::vector<Dart> images(degree);
  std::iota(images.begin(), images.end(), Dart{0});
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (Dart d : cycle) {
      if (d >= degree) {
        throw std::invalid_argument("cycle label " + std::to_string(d + 1) +
                                    " exceeds degree " + std::to_string(degree));
      }
      if (used[d]) {
        throw std::invalid_argument("label " + std::to_string(d + 1) +
                                    " appears more than once");
      }
      used[d] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " +
                                std::to_string(q.degree()));
  }
  std::vector<Dart> images(p.degree());
  for (Dart i = 0; i < images.size(); ++i) images[i] = q(p(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation &p) {
  std::vector<Dart> images(p.degree());
  for (Dart i = 0; i < images.size(); ++i) images[p(i)] = i;
  return Permutation(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation &p) {
  // Walking labels in increasing order starts every cycle at its minimum
  // and emits cycles sorted by minimum.
  CycleDecomposition out;
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  out.orbit_of.assign(p.degree(), kUnvisited);
  for (Dart start = 0; start < p.degree(); ++start) {
    if (out.orbit_of[start] != kUnvisited) continue;
    Cycle cycle;
    Dart d = start;
    do {
      out.orbit_of[d] = out.cycles.size();
      cycle.push_back(d);
      d = p(d);
    } while (d != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool same_partition(const CycleDecomposition &a, const CycleDecomposition &b) {
  if (a.orbit_of.size() != b.orbit_of.size() || a.size() != b.size()) return false;
  // Both sides number blocks by minimum element, so equal partitions give
  // equal block indices dart by dart.
  return a.orbit_of == b.orbit_of;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<Dart>> orbit_components(const Permutation &p,
                                                const Permutation &q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("permutations have different degrees");
  }
  UnionFind uf(p.degree());
  for (Dart i = 0; i < p.degree(); ++i) {
    uf.unite(i, p(i));
    uf.unite(i, q(i));
  }
  std::vector<std::vector<Dart>> components;
  std::vector<std::size_t> slot(p.degree(), static_cast<std::size_t>(-1));
  for (Dart i = 0; i < p.degree(); ++i) {
    std::size_t root = uf.find(i);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(i);
  }
  return components;
}

bool is_transitive(const Permutation &p, const Permutation &q) {
  return orbit_components(p, q).size() == 1;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Dart>> cycles;
  std::vector<std::size_t> first_seen(degree, 0);
  bool in_cycle = false;
  std::size_t i = 0;
  auto column = [&](std::size_t pos) { return pos + 1; };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (in_cycle) throw CycleParseError(column(i), "nested '(' in cycle notation");
      in_cycle = true;
      cycles.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!in_cycle) throw CycleParseError(column(i), "unmatched ')'");
      in_cycle = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_cycle) {
        throw CycleParseError(column(i), "label outside of parentheses");
      }
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) {
          throw CycleParseError(column(start), "label exceeds dart count " +
                                                   std::to_string(degree));
        }
        ++i;
      }
      if (value == 0) throw CycleParseError(column(start), "labels start at 1");
      Dart d = static_cast<Dart>(value - 1);
      if (first_seen[d] != 0) {
        throw CycleParseError(column(start),
                              "label " + std::to_string(value) +
                                  " already used at column " +
                                  std::to_string(first_seen[d]));
      }
      first_seen[d] = column(start);
      cycles.back().push_back(d);
    } else {
      throw CycleParseError(column(i), std::string("unexpected character '") + c + "'");
    }
  }
  if (in_cycle) throw CycleParseError(column(text.size()), "unterminated cycle");
  if (degree == 0) throw CycleParseError(1, "dart count must be at least 1");
  return Permutation::from_cycles(degree, cycles);
}

std::string format_cycle(const Cycle &cycle) {
  std::string out = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(cycle[i] + 1);
  }
  out += ')';
  return out;
}

std::string format_cycles(const Permutation &p) {
  std::string out;
  for (const auto &cycle : cycle_decomposition(p).cycles) {
    if (cycle.size() > 1) out += format_cycle(cycle);
  }
  return out.empty() ? "()" : out;
}

}  // namespace hypercode
