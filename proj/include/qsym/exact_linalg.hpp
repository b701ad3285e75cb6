// Copyright 2026 The qsym Authors
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

#pragma once

/// @file exact_linalg.hpp
/// Division-free Gauss–Jordan elimination over an integral domain.
///
/// Used with QScalar entries, where it computes ranks and null spaces over
/// the fraction field of the Laurent ring without ever dividing: a row
/// update is row_i ← p·row_i − a·row_r. Entries grow, which is acceptable
/// for the chain sizes it is applied to (dimension ≤ 16).

#include "qsym/sparse.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsym {

template <class S>
using DenseRows = std::vector<std::vector<S>>;

template <class S>
struct ReducedForm {
  DenseRows<S> rows;                     ///< pivot rows first, in pivot order
  std::vector<std::size_t> pivot_cols;  ///< pivot column of each leading row
};

template <class S>
ReducedForm<S> gauss_jordan(DenseRows<S> rows) {
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n_cols) throw std::invalid_argument("gauss_jordan: ragged rows");

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && is_zero(rows[p][col])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    const S pivot = rows[rank][col];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || is_zero(rows[i][col])) continue;
      const S factor = rows[i][col];
      for (std::size_t c = 0; c < n_cols; ++c) rows[i][c] = pivot * rows[i][c] - factor * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(rows), std::move(pivots)};
}

template <class S>
std::size_t exact_rank(DenseRows<S> rows) {
  return gauss_jordan(std::move(rows)).pivot_cols.size();
}

template <class S>
DenseRows<S> to_dense_rows(const SparseOperator<S>& a) {
  DenseRows<S> rows(a.rows(), std::vector<S>(a.cols()));
  a.for_each([&](index_t r, index_t c, const S& v) { rows[r][c] = v; });
  return rows;
}

/// Basis of {x : A x = 0} with entries in the ring.
template <class S>
DenseRows<S> exact_nullspace(const SparseOperator<S>& a) {
  const auto reduced = gauss_jordan(to_dense_rows(a));
  const std::size_t n_cols = a.cols();
  const auto& pivots = reduced.pivot_cols;
  std::vector<bool> is_pivot(n_cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  // x_f = Π p_r and x_{c_r} = −a_{r,f} Π_{r'≠r} p_{r'} solves every reduced row.
  DenseRows<S> basis;
  for (std::size_t f = 0; f < n_cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> x(n_cols);
    S all(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) all = all * reduced.rows[r][pivots[r]];
    x[f] = all;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (is_zero(reduced.rows[r][f])) continue;
      S others(1);
      for (std::size_t k = 0; k < pivots.size(); ++k)
        if (k != r) others = others * reduced.rows[k][pivots[k]];
      x[pivots[r]] = -(reduced.rows[r][f] * others);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// v and w are proportional over the fraction field: v_i w_j = v_j w_i for all i, j.
template <class S>
bool proportional(const std::vector<S>& v, const std::vector<S>& w) {
  if (v.size() != w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!is_zero(v[i] * w[j] - v[j] * w[i])) return false;
  return true;
}

}  // namespace qsym
