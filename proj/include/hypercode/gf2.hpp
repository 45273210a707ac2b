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

#ifndef HYPERCODE_GF2_HPP
#define HYPERCODE_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypercode::gf2 {

/// Fixed-length vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument otherwise.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector &operator^=(const BitVector &other);
  /// Parity of the bitwise AND.
  bool dot(const BitVector &other) const;
  std::size_t weight() const;
  bool is_zero() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const;

  std::string to_string() const;

  friend bool operator==(const BitVector &, const BitVector &) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix stored as bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// One string of '0'/'1' per row; all rows must share a length. A
  /// column count is required to express matrices with zero rows.
  static BitMatrix from_rows(const std::vector<std::string> &rows, std::size_t cols);
  static BitMatrix from_rows(const std::vector<std::string> &rows);
  static BitMatrix from_row_vectors(const std::vector<BitVector> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

  const BitVector &row(std::size_t r) const { return data_[r]; }
  BitVector &row(std::size_t r) { return data_[r]; }
  BitVector column(std::size_t c) const;

  bool is_zero() const;

  /// Rows of '0'/'1' characters, newline-terminated.
  std::string to_string() const;
  std::vector<std::string> row_strings() const;

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Throws std::invalid_argument when a.cols() != b.rows().
BitMatrix multiply(const BitMatrix &a, const BitMatrix &b);
/// Throws std::invalid_argument when m.cols() != v.size().
BitVector multiply(const BitMatrix &m, const BitVector &v);
BitMatrix transpose(const BitMatrix &m);

/// Reduced row-echelon form with its pivot columns in increasing order.
/// Zero rows are dropped, so reduced.rows() == rank.
struct RowEchelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(const BitMatrix &m);

std::size_t rank(const BitMatrix &m);

/// Basis of {v : m v = 0}, one basis vector per row. Row j is the vector
/// whose j-th free column (increasing order) is 1 and other free columns 0.
BitMatrix kernel_basis(const BitMatrix &m);

/// Row space of a matrix kept in reduced form for repeated membership tests.
class RowSpace {
 public:
  explicit RowSpace(const BitMatrix &m);

  std::size_t dimension() const { return echelon_.pivot_cols.size(); }
  std::size_t ambient() const { return echelon_.reduced.cols(); }
  /// Throws std::invalid_argument on length mismatch.
  bool contains(const BitVector &v) const;

 private:
  RowEchelon echelon_;
};

/// Whether v is a GF(2) combination of the rows of m.
bool in_row_space(const BitMatrix &m, const BitVector &v);

}  // namespace hypercode::gf2

#endif  // HYPERCODE_GF2_HPP
