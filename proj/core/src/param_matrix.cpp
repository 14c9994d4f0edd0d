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

#include "anchorcheck/exactnum/param_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace anchorcheck::exactnum {
namespace {

using PolyRows = std::vector<std::vector<ParamPoly>>;

// Multiplies each row by a common multiple of its denominators.
// Monomial denominators share an lcm; anything else is multiplied in.
std::vector<ParamPoly> ClearRow(const std::vector<const ParamRational*>& row) {
  ParamPoly multiplier(1);
  Monomial mono_lcm;
  mpz_class coef_lcm = 1;
  for (const ParamRational* x : row) {
    if (x->is_zero()) continue;
    const ParamPoly& d = x->den();
    if (d.is_monomial() && d.leading().coef.is_integer()) {
      mpz_lcm(coef_lcm.get_mpz_t(), coef_lcm.get_mpz_t(),
              d.leading().coef.value().get_num_mpz_t());
      mono_lcm.deg_a = std::max(mono_lcm.deg_a, d.leading().mono.deg_a);
      mono_lcm.deg_r = std::max(mono_lcm.deg_r, d.leading().mono.deg_r);
    } else if (!multiplier.exact_divide(d)) {
      multiplier = multiplier * d;
    }
  }
  multiplier = multiplier.times_monomial(Rational(mpq_class(coef_lcm)), mono_lcm);
  std::vector<ParamPoly> out;
  out.reserve(row.size());
  for (const ParamRational* x : row) {
    if (x->is_zero()) {
      out.emplace_back();
      continue;
    }
    auto q = (multiplier * x->num()).exact_divide(x->den());
    if (!q) throw std::logic_error("ClearRow: denominator does not divide");
    out.push_back(std::move(*q));
  }
  return out;
}

struct Echelon {
  PolyRows rows;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free elimination to row echelon form. Every intermediate entry
// is a minor of the input, so each division by the previous pivot is exact.
Echelon BareissEchelon(PolyRows m, std::size_t cols) {
  Echelon e;
  const std::size_t nrows = m.size();
  ParamPoly prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[rank], m[pivot]);
    const ParamPoly& p = m[rank][col];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      const ParamPoly lead = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        ParamPoly v = p * m[i][j] - lead * m[rank][j];
        if (v.is_zero()) {
          m[i][j] = ParamPoly();
          continue;
        }
        auto q = v.exact_divide(prev);
        if (!q) throw std::logic_error("Bareiss: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][col] = ParamPoly();
    }
    prev = m[rank][col];
    e.pivot_cols.push_back(col);
    ++rank;
  }
  e.rows = std::move(m);
  return e;
}

PolyRows Cleared(const ParamMatrix& m, const std::vector<ParamRational>* extra) {
  PolyRows rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<const ParamRational*> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(&m.at(i, j));
    if (extra) row.push_back(&(*extra)[i]);
    rows.push_back(ClearRow(row));
  }
  return rows;
}

}  // namespace

ParamMatrix ParamMatrix::FromRows(
    const std::vector<std::vector<ParamRational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ParamMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("ParamMatrix: ragged rows");
    }
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

ParamMatrix ParamMatrix::Identity(std::size_t n) {
  ParamMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = ParamRational(1);
  return out;
}

void ParamMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
}

ParamMatrix ParamMatrix::instantiate(const Rational& a, const Rational& r) const {
  ParamMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    auto v = data_[k].evaluate(a, r);
    if (!v) throw std::domain_error("ParamMatrix: entry undefined at (a, r)");
    out.data_[k] = ParamRational(*v);
  }
  return out;
}

std::size_t BareissRank(const ParamMatrix& m) {
  return BareissEchelon(Cleared(m, nullptr), m.cols()).pivot_cols.size();
}

std::optional<std::vector<ParamRational>> SolveLinear(
    const ParamMatrix& m, const std::vector<ParamRational>& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("SolveLinear: right-hand side size mismatch");
  }
  const std::size_t n = m.cols();
  Echelon e = BareissEchelon(Cleared(m, &b), n + 1);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;

  std::vector<ParamRational> x(n);
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    const auto& row = e.rows[k];
    ParamRational acc(row[n]);
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (!row[j].is_zero() && !x[j].is_zero()) acc -= ParamRational(row[j]) * x[j];
    }
    x[pc] = acc / ParamRational(row[pc]);
  }
  return x;
}

}  // namespace anchorcheck::exactnum
