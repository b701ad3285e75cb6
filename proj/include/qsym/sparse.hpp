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

/// @file sparse.hpp
/// Row-compressed sparse operators over an arbitrary scalar type.
///
/// Storage is one ordered map per row, so iteration order (row, then
/// column) is deterministic and entries that cancel to zero are removed.
/// Every chain-level object (site operators, coproducts, permutation
/// representations, projectors) is a SparseOperator.

#include "qsym/basis.hpp"
#include "qsym/qscalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsym {

template <class S>
class SparseOperator {
 public:
  using scalar_type = S;
  using row_type = std::map<index_t, S>;

  SparseOperator() = default;
  SparseOperator(index_t rows, index_t cols) : cols_(cols), rows_(rows) {}
  explicit SparseOperator(index_t dim) : SparseOperator(dim, dim) {}

  static SparseOperator identity(index_t dim, const S& one) {
    SparseOperator out(dim);
    for (index_t i = 0; i < dim; ++i) out.rows_[i].emplace(i, one);
    return out;
  }

  static SparseOperator diagonal(std::span<const S> values) {
    SparseOperator out(values.size());
    for (index_t i = 0; i < values.size(); ++i)
      if (!is_zero(values[i])) out.rows_[i].emplace(i, values[i]);
    return out;
  }

  [[nodiscard]] index_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] index_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows() == cols_; }

  [[nodiscard]] const row_type& row(index_t r) const { return rows_.at(r); }

  [[nodiscard]] std::size_t nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  /// Entry value, or `zero` when structurally absent.
  [[nodiscard]] S at(index_t r, index_t c, const S& zero = S{}) const {
    check(r, c);
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? zero : it->second;
  }

  void set(index_t r, index_t c, S value) {
    check(r, c);
    if (is_zero(value))
      rows_[r].erase(c);
    else
      rows_[r].insert_or_assign(c, std::move(value));
  }

  void add(index_t r, index_t c, const S& value) {
    check(r, c);
    if (is_zero(value)) return;
    auto [it, inserted] = rows_[r].try_emplace(c, value);
    if (!inserted) {
      it->second += value;
      if (is_zero(it->second)) rows_[r].erase(it);
    }
  }

  /// Visit nonzeros in (row, col) order.
  template <class F>
  void for_each(F&& f) const {
    for (index_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) f(r, c, v);
  }

  template <class F>
  [[nodiscard]] auto transform(F&& f) const -> SparseOperator<decltype(f(std::declval<const S&>()))> {
    using T = decltype(f(std::declval<const S&>()));
    SparseOperator<T> out(rows(), cols_);
    for_each([&](index_t r, index_t c, const S& v) { out.set(r, c, f(v)); });
    return out;
  }

  [[nodiscard]] SparseOperator transpose() const {
    SparseOperator out(cols_, rows());
    for_each([&](index_t r, index_t c, const S& v) { out.rows_[c].emplace(r, v); });
    return out;
  }

  SparseOperator& operator+=(const SparseOperator& rhs) {
    require_same_shape(rhs);
    rhs.for_each([&](index_t r, index_t c, const S& v) { add(r, c, v); });
    return *this;
  }
  SparseOperator& operator-=(const SparseOperator& rhs) {
    require_same_shape(rhs);
    rhs.for_each([&](index_t r, index_t c, const S& v) { add(r, c, -v); });
    return *this;
  }
  SparseOperator& operator*=(const S& k) {
    if (is_zero(k)) {
      for (auto& r : rows_) r.clear();
      return *this;
    }
    for (auto& r : rows_) {
      for (auto it = r.begin(); it != r.end();) {
        it->second = it->second * k;
        it = is_zero(it->second) ? r.erase(it) : std::next(it);
      }
    }
    return *this;
  }

  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(SparseOperator a, const S& k) { return a *= k; }
  friend SparseOperator operator*(const S& k, SparseOperator a) { return a *= k; }

  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("operator product: shape mismatch");
    SparseOperator out(a.rows(), b.cols());
    for (index_t r = 0; r < a.rows(); ++r) {
      auto& acc = out.rows_[r];
      for (const auto& [k, av] : a.rows_[r]) {
        for (const auto& [c, bv] : b.rows_[k]) {
          auto [it, inserted] = acc.try_emplace(c, av * bv);
          if (!inserted) it->second += av * bv;
        }
      }
      std::erase_if(acc, [](const auto& kv) { return is_zero(kv.second); });
    }
    return out;
  }

  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  [[nodiscard]] std::vector<S> apply(std::span<const S> x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<S> y(rows());
    for (index_t r = 0; r < rows(); ++r) {
      S acc{};
      for (const auto& [c, v] : rows_[r]) acc += v * x[c];
      y[r] = acc;
    }
    return y;
  }

  [[nodiscard]] bool is_diagonal() const {
    for (index_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r])
        if (c != r) return false;
    return true;
  }

  [[nodiscard]] std::vector<S> diagonal_values() const {
    std::vector<S> d(std::min(rows(), cols_));
    for (index_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
    return d;
  }

 private:
  void check(index_t r, index_t c) const {
    if (r >= rows() || c >= cols_) throw std::out_of_range("operator index out of range");
  }
  void require_same_shape(const SparseOperator& rhs) const {
    if (rows() != rhs.rows() || cols_ != rhs.cols_)
      throw std::invalid_argument("operator sum: shape mismatch");
  }

  index_t cols_ = 0;
  std::vector<row_type> rows_;
};

/// Kronecker product with `a` as the left (more significant) factor.
template <class S>
SparseOperator<S> kron(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  SparseOperator<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  a.for_each([&](index_t ra, index_t ca, const S& va) {
    b.for_each([&](index_t rb, index_t cb, const S& vb) {
      out.set(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
    });
  });
  return out;
}

template <class S>
SparseOperator<S> commutator(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  return a * b - b * a;
}

/// Largest entry magnitude.
template <class S>
double max_magnitude(const SparseOperator<S>& a) {
  double m = 0.0;
  a.for_each([&](index_t, index_t, const S& v) { m = std::max(m, magnitude(v)); });
  return m;
}

/// max |a - b| scaled by max(1, max|b|). Zero iff the operators are equal.
template <class S>
double residual(const SparseOperator<S>& a, const SparseOperator<S>& b) {
  const double scale = std::max({1.0, max_magnitude(a), max_magnitude(b)});
  return max_magnitude(a - b) / scale;
}

template <class S>
double residual(std::span<const S> a, std::span<const S> b) {
  if (a.size() != b.size()) throw std::invalid_argument("residual: length mismatch");
  double scale = 1.0;
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max({scale, magnitude(a[i]), magnitude(b[i])});
    diff = std::max(diff, magnitude(a[i] - b[i]));
  }
  return diff / scale;
}

template <class S>
double residual(const std::vector<S>& a, const std::vector<S>& b) {
  return residual(std::span<const S>(a), std::span<const S>(b));
}

/// Lift a single-site operator to site `site` (1-based) of an N-site chain.
template <class S>
SparseOperator<S> embed_site(const SparseOperator<S>& site_op, int site, int n_sites) {
  if (site_op.rows() != 2 || site_op.cols() != 2) throw std::invalid_argument("embed_site: expected 2x2 operator");
  if (site < 1 || site > n_sites) throw std::out_of_range("embed_site: site out of range");
  const index_t dim = chain_dimension(n_sites);
  SparseOperator<S> out(dim);
  for (index_t col = 0; col < dim; ++col) {
    const int in_bit = site_bit(col, site, n_sites);
    for (int out_bit = 0; out_bit < 2; ++out_bit) {
      auto it = site_op.row(static_cast<index_t>(out_bit)).find(static_cast<index_t>(in_bit));
      if (it == site_op.row(static_cast<index_t>(out_bit)).end()) continue;
      out.set(set_site_bit(col, site, n_sites, out_bit), col, it->second);
    }
  }
  return out;
}

/// Lift a 4x4 two-site operator onto sites (i, i+1) of an N-site chain.
template <class S>
SparseOperator<S> embed_adjacent(const SparseOperator<S>& pair_op, int i, int n_sites) {
  if (pair_op.rows() != 4 || pair_op.cols() != 4) throw std::invalid_argument("embed_adjacent: expected 4x4 operator");
  if (i < 1 || i >= n_sites) throw std::out_of_range("embed_adjacent: site index out of range");
  const index_t dim = chain_dimension(n_sites);
  SparseOperator<S> out(dim);
  for (index_t col = 0; col < dim; ++col) {
    const index_t local_in =
        static_cast<index_t>(2 * site_bit(col, i, n_sites) + site_bit(col, i + 1, n_sites));
    for (index_t local_out = 0; local_out < 4; ++local_out) {
      auto it = pair_op.row(local_out).find(local_in);
      if (it == pair_op.row(local_out).end()) continue;
      index_t row = set_site_bit(col, i, n_sites, static_cast<int>(local_out >> 1));
      row = set_site_bit(row, i + 1, n_sites, static_cast<int>(local_out & 1));
      out.set(row, col, it->second);
    }
  }
  return out;
}

}  // namespace qsym
