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

/// @file hecke.hpp
/// Fundamental R-matrix and the Hecke generators A_i = q^(1/4) W_i R_i.
///
/// The universal R-matrix
///
///   R = q^(J³⊗J³) Σₙ (1 − q⁻¹)ⁿ / [n]_q! (q^(J³/2) J⁺)ⁿ ⊗ (q^(-J³/2) J⁻)ⁿ
///
/// is summed term by term in the fundamental representation; the series
/// stops at the first power of J⁺ that vanishes (n = 2).

#include "qsym/algebra.hpp"
#include "qsym/backend.hpp"
#include "qsym/report.hpp"
#include "qsym/sparse.hpp"
#include "qsym/symgroup.hpp"

#include <stdexcept>
#include <string>

namespace qsym {

/// α = q^(1/2) − q^(-1/2)
template <Backend B>
scalar_t<B> hecke_alpha(const B& backend) {
  return backend.q_quarter_power(2) - backend.q_quarter_power(-2);
}

template <Backend B>
SparseOperator<scalar_t<B>> r_matrix_fundamental(const B& backend) {
  using S = scalar_t<B>;
  const auto g = generators(kFundamental, backend);

  // q^(J³⊗J³) on (j₃, j₃') is q^(j₃ j₃') = q^(±1/4).
  SparseOperator<S> cartan(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int product = kFundamental.two_m(a) * kFundamental.two_m(b);  // ±1
      const auto idx = static_cast<index_t>(2 * a + b);
      cartan.set(idx, idx, backend.q_quarter_power(product));
    }

  const auto left = g.kplus * g.jplus;
  const auto right = g.kminus * g.jminus;
  const S step = backend.one() - backend.q_quarter_power(-4);  // 1 − q⁻¹

  auto series = SparseOperator<S>::identity(4, backend.one());
  auto left_pow = SparseOperator<S>::identity(2, backend.one());
  auto right_pow = SparseOperator<S>::identity(2, backend.one());
  S coeff = backend.one();
  for (int n = 1;; ++n) {
    left_pow = left_pow * left;
    right_pow = right_pow * right;
    if (left_pow.nonzeros() == 0 || right_pow.nonzeros() == 0) break;
    coeff = backend.divide(coeff * step, backend.q_number(n));
    series += kron(left_pow, right_pow) * coeff;
  }
  return cartan * series;
}

template <Backend B>
SparseOperator<scalar_t<B>> r_matrix_site(int i, int n, const B& backend) {
  return embed_adjacent(r_matrix_fundamental(backend), i, n);
}

/// A_i = q^(1/4) W_i R_i
template <Backend B>
SparseOperator<scalar_t<B>> hecke_generator(int i, int n, const B& backend) {
  return perm_rep(Permutation::transposition(i, n), backend) * r_matrix_site(i, n, backend) *
         backend.q_quarter_power(1);
}

/// Yang–Baxter on three sites, in R form and in braid form for WR.
template <Backend B>
VerificationReport verify_yang_baxter(const B& backend) {
  constexpr int n = 3;
  const auto r12 = r_matrix_site(1, n, backend);
  const auto r23 = r_matrix_site(2, n, backend);
  const auto w1 = perm_rep(Permutation::transposition(1, n), backend);
  const auto w2 = perm_rep(Permutation::transposition(2, n), backend);
  const auto r13 = w2 * r12 * w2;

  VerificationReport report;
  report.record(backend, "R13 = W2 R1 W2 = W1 R2 W1", residual(r13, w1 * r23 * w1));
  report.record(backend, "Yang-Baxter R12 R13 R23 = R23 R13 R12", residual(r12 * r13 * r23, r23 * r13 * r12));
  const auto b1 = w1 * r12;
  const auto b2 = w2 * r23;
  report.record(backend, "braid (WR)1 (WR)2 (WR)1 = (WR)2 (WR)1 (WR)2", residual(b1 * b2 * b1, b2 * b1 * b2));
  return report;
}

}  // namespace qsym
