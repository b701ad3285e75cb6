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

/// @file dense.hpp
/// Bridges from numeric sparse operators to Eigen dense matrices.

#include "qsym/sparse.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qsym {

inline Eigen::MatrixXd to_eigen(const SparseOperator<double>& a) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  a.for_each([&](index_t r, index_t c, double v) { m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v; });
  return m;
}

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline std::vector<double> from_eigen(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

/// Columns as an orthonormal basis of their span (thin QR with rank cut).
inline Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns, double tol = 1e-10) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(columns);
  qr.setThreshold(tol);
  const auto rank = qr.rank();
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(columns.rows(), rank);
  return q;
}

/// Sine of the largest principal angle between the column spans of two
/// orthonormal bases of equal dimension: ‖(1 − U Uᵀ) V‖₂.
inline double max_principal_sine(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) {
  if (u.cols() != v.cols()) return 1.0;
  const Eigen::MatrixXd residual = v - u * (u.transpose() * v);
  if (residual.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  return svd.singularValues()(0);
}

}  // namespace qsym
