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

// Text formats. Every label written or read here is 1-based.
//
// Hypermap files:
//
//   # comment
//   darts: 8
//   alpha: (4 3 2 1)(5 7 8 6)
//   sigma: (7 1 6 3)(5 2 8 4)
//   special: 2 5
//
// The special line is optional. JSON documents carry "version",
// "type" and "indexing" fields and keep a fixed field order.

#ifndef HYPERCODE_IO_HPP
#define HYPERCODE_IO_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypercode/chain.hpp"
#include "hypercode/css.hpp"
#include "hypercode/hypermap.hpp"
#include "hypercode/reduce.hpp"

namespace hypercode::io {

inline constexpr int kFormatVersion = 1;

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string &message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string &message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct HypermapFile {
  Hypermap hypermap;
  /// 0-based darts from the optional "special:" line.
  std::optional<std::vector<Dart>> special;
};

/// Throws ParseError on malformed input and NotTransitiveError when the
/// permutations do not form a hypermap.
HypermapFile parse_hypermap_file(std::string_view text);

std::string format_hypermap_file(const Hypermap &h,
                                 const std::optional<std::vector<Dart>> &special = std::nullopt);

/// Whitespace-separated 1-based labels, returned 0-based. Throws ParseError
/// with line 1 on bad input.
std::vector<Dart> parse_label_list(std::string_view text, std::size_t darts);

/// Bipartite vertex/edge graph in DOT: round nodes v1.., square nodes e1..,
/// one link per dart labeled with the dart number.
std::string walsh_dot(const Hypermap &h);

std::string export_json(const Hypermap &h);
/// `source`, when given, adds the construction kind and special darts.
std::string export_json(const css::CssCode &c, const chain::QuotientCode *source = nullptr);
std::string export_json(const reduce::CellComplex &c);

/// Inverses of export_json. Derived fields are ignored. Throw ParseError on
/// malformed documents.
Hypermap parse_hypermap_json(std::string_view text);
css::CssCode parse_code_json(std::string_view text);
reduce::CellComplex parse_complex_json(std::string_view text);

}  // namespace hypercode::io

#endif  // HYPERCODE_IO_HPP
