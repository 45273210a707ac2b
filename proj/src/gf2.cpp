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

#include "hypercode/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace hypercode::gf2 {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector &BitVector::operator^=(const BitVector &other) {
  if (other.size_ != size_) throw std::invalid_argument("bit vector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::dot(const BitVector &other) const {
  if (other.size_ != size_) throw std::invalid_argument("bit vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::is_zero() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " has length " +
                                  std::to_string(rows[r].size()) + ", expected " +
                                  std::to_string(cols));
    }
    m.data_[r] = BitVector::from_string(rows[r]);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

BitMatrix BitMatrix::from_row_vectors(const std::vector<BitVector> &rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row vector length mismatch");
    m.data_[r] = rows[r];
  }
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

bool BitMatrix::is_zero() const {
  for (const auto &r : data_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (const auto &r : data_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

std::vector<std::string> BitMatrix::row_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (const auto &r : data_) out.push_back(r.to_string());
  return out;
}

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("cannot multiply " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(r, k)) out.row(r) ^= b.row(k);
    }
  }
  return out;
}

BitVector multiply(const BitMatrix &m, const BitVector &v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector length mismatch");
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).dot(v)) out.set(r);
  }
  return out;
}

BitMatrix transpose(const BitMatrix &m) {
  BitMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) out.set(c, r);
    }
  }
  return out;
}

RowEchelon row_reduce(const BitMatrix &m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows.size(); ++c) {
    std::size_t found = lead;
    while (found < rows.size() && !rows[found].get(c)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[lead], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead && rows[r].get(c)) rows[r] ^= rows[lead];
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  return {BitMatrix::from_row_vectors(rows, m.cols()), std::move(pivots)};
}

std::size_t rank(const BitMatrix &m) { return row_reduce(m).pivot_cols.size(); }

BitMatrix kernel_basis(const BitMatrix &m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivot_cols) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      if (ech.reduced.get(r, free)) v.set(ech.pivot_cols[r]);
    }
    basis.push_back(std::move(v));
  }
  return BitMatrix::from_row_vectors(basis, m.cols());
}

RowSpace::RowSpace(const BitMatrix &m) : echelon_(row_reduce(m)) {}

bool RowSpace::contains(const BitVector &v) const {
  if (v.size() != ambient()) {
    throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                " does not match " + std::to_string(ambient()) + " columns");
  }
  BitVector residue = v;
  for (std::size_t r = 0; r < echelon_.pivot_cols.size(); ++r) {
    if (residue.get(echelon_.pivot_cols[r])) residue ^= echelon_.reduced.row(r);
  }
  return residue.is_zero();
}

bool in_row_space(const BitMatrix &m, const BitVector &v) { return RowSpace(m).contains(v); }

}  // namespace hypercode::gf2
