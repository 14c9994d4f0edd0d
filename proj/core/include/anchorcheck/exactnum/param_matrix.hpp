// Copyright 2026 The Anchorcheck Authors
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

#ifndef ANCHORCHECK_EXACTNUM_PARAM_MATRIX_HPP_
#define ANCHORCHECK_EXACTNUM_PARAM_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "anchorcheck/exactnum/param_rational.hpp"

namespace anchorcheck::exactnum {

// Dense row-major matrix over Q(a, r).
class ParamMatrix {
 public:
  ParamMatrix() = default;
  ParamMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws std::invalid_argument on ragged input.
  static ParamMatrix FromRows(const std::vector<std::vector<ParamRational>>& rows);
  static ParamMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ParamRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ParamRational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t i, std::size_t k);
  // Substitutes a, r. Throws std::domain_error if an entry's denominator
  // vanishes there.
  ParamMatrix instantiate(const Rational& a, const Rational& r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ParamRational> data_;
};

// Exact rank over Q(a, r) via fraction-free (Bareiss) elimination on the
// row-wise denominator-cleared matrix. Pivot: first nonzero entry, scanning
// columns left to right and rows top to bottom.
std::size_t BareissRank(const ParamMatrix& m);

// Some solution x of m * x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero.
std::optional<std::vector<ParamRational>> SolveLinear(
    const ParamMatrix& m, const std::vector<ParamRational>& b);

}  // namespace anchorcheck::exactnum

#endif  // ANCHORCHECK_EXACTNUM_PARAM_MATRIX_HPP_
