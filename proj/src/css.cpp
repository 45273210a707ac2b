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

#include <algorithm>
#include <limits>

namespace hypercode::css {

CssCode make_code(gf2::BitMatrix hx, gf2::BitMatrix hz, std::vector<Dart> qubit_labels,
                  std::vector<std::string> x_check_names,
                  std::vector<std::string> z_check_names) {
  if (hx.cols() != hz.cols() || hx.cols() != qubit_labels.size()) {
    throw std::invalid_argument("check matrices and qubit labels disagree on qubit count");
  }
  if (x_check_names.size() != hx.rows() || z_check_names.size() != hz.rows()) {
    throw std::invalid_argument("check names do not match check matrix rows");
  }
  if (!gf2::multiply(hx, gf2::transpose(hz)).is_zero()) {
    throw InvariantError("X and Z checks do not commute");
  }
  CssCode c;
  c.n = qubit_labels.size();
  c.k = c.n - gf2::rank(hx) - gf2::rank(hz);
  c.hx = std::move(hx);
  c.hz = std::move(hz);
  c.qubit_labels = std::move(qubit_labels);
  c.x_check_names = std::move(x_check_names);
  c.z_check_names = std::move(z_check_names);
  return c;
}

CssCode assemble(const chain::QuotientCode &q) {
  const std::string z_prefix = q.kind == chain::CodeKind::kEdge ? "e" : "f";
  std::vector<std::string> x_names, z_names;
  for (std::size_t i = 0; i < q.x_axis.size(); ++i) x_names.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < q.z_axis.size(); ++i) {
    z_names.push_back(z_prefix + std::to_string(i + 1));
  }
  return make_code(q.boundary1, gf2::transpose(q.boundary2), q.qubit_labels, std::move(x_names),
                   std::move(z_names));
}

namespace {

std::string render_check(char pauli, const std::string &name, const gf2::BitVector &row,
                         const std::vector<Dart> &labels) {
  std::string out;
  out += pauli;
  out += '_' + name + " =";
  bool any = false;
  for (std::size_t q = 0; q < row.size(); ++q) {
    if (!row.get(q)) continue;
    out += ' ';
    out += pauli;
    out += std::to_string(labels[q] + 1);
    any = true;
  }
  if (!any) out += " I";
  return out;
}

class LogicalSearch {
 public:
  LogicalSearch(const gf2::BitMatrix &commutes_with, const gf2::BitMatrix &stabilizers)
      : kernel_(gf2::kernel_basis(commutes_with)), stabilizers_(stabilizers) {}

  ClassDistance run(std::size_t max_weight) {
    const std::size_t dim = kernel_.rows();
    const std::size_t limit = std::min(max_weight, dim);
    for (std::size_t w = 1; w <= limit; ++w) {
      gf2::BitVector acc(kernel_.cols());
      visit(0, w, acc);
      if (best_ <= w) return {best_, true};
    }
    if (dim <= max_weight && best_ != kNone) return {best_, true};
    return {max_weight + 1, false};
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Every subset of `remaining` basis rows drawn from [start, dim).
  void visit(std::size_t start, std::size_t remaining, gf2::BitVector &acc) {
    if (remaining == 0) {
      const std::size_t w = acc.weight();
      if (w < best_ && !stabilizers_.contains(acc)) best_ = w;
      return;
    }
    for (std::size_t r = start; r + remaining <= kernel_.rows(); ++r) {
      acc ^= kernel_.row(r);
      visit(r + 1, remaining - 1, acc);
      acc ^= kernel_.row(r);
    }
  }

  gf2::BitMatrix kernel_;
  gf2::RowSpace stabilizers_;
  std::size_t best_ = kNone;
};

}  // namespace

std::vector<std::string> stabilizer_strings(const CssCode &c) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < c.hx.rows(); ++r) {
    out.push_back(render_check('X', c.x_check_names[r], c.hx.row(r), c.qubit_labels));
  }
  for (std::size_t r = 0; r < c.hz.rows(); ++r) {
    out.push_back(render_check('Z', c.z_check_names[r], c.hz.row(r), c.qubit_labels));
  }
  return out;
}

DistanceResult distance(const CssCode &c, const DistanceOptions &options) {
  if (c.n > options.max_qubits && !options.allow_large) {
    throw DistanceLimitError("distance search refused for n = " + std::to_string(c.n) +
                             " > " + std::to_string(options.max_qubits) +
                             " without an explicit override");
  }
  DistanceResult result;
  result.max_weight = options.max_weight;
  if (c.k == 0) return result;
  result.has_logicals = true;
  result.x = LogicalSearch(c.hz, c.hx).run(options.max_weight);
  result.z = LogicalSearch(c.hx, c.hz).run(options.max_weight);

  const std::size_t lowest = std::min(result.x.weight, result.z.weight);
  const bool exact = (result.x.exact && result.x.weight == lowest) ||
                     (result.z.exact && result.z.weight == lowest);
  result.d = {lowest, exact};
  return result;
}

}  // namespace hypercode::css
