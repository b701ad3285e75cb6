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

/// @file dicke.hpp
/// Dicke and q-Dicke states.
///
/// |D^m_N⟩_q ∝ (Δ⁽ᴺ⁾(J⁺))^m |↓…↓⟩. In the exact backend a state is stored
/// as in-ring amplitudes together with the in-ring squared norm:
///
///   amplitudes = (Δ⁽ᴺ⁾(J⁺))^m |G⟩ / [m]_q!,   norm_sq = binom(N, m)_q,
///
/// so the normalized state is amplitudes / sqrt(norm_sq) and no square
/// root is ever formed. The numeric backend stores normalized amplitudes
/// with norm_sq = 1.

#include "qsym/backend.hpp"
#include "qsym/basis.hpp"
#include "qsym/coproduct.hpp"
#include "qsym/sparse.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

template <class S>
struct QState {
  int n_sites = 0;
  int m = 0;  ///< number of up spins; -1 for states outside the Dicke family
  std::vector<S> amplitudes;
  S norm_sq{};
};

/// Σ amplitude², computed in the scalar ring (all amplitudes are real).
template <class S>
S sum_of_squares(const std::vector<S>& v) {
  S total{};
  for (const auto& a : v) total += a * a;
  return total;
}

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  S total{};
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

/// |↓…↓⟩, the last basis vector.
template <Backend B>
QState<scalar_t<B>> ground_state(int n_sites, const B& backend) {
  check_sites(n_sites);
  QState<scalar_t<B>> g{n_sites, 0, std::vector<scalar_t<B>>(chain_dimension(n_sites), backend.zero()),
                        backend.one()};
  g.amplitudes.back() = backend.one();
  return g;
}

template <Backend B>
QState<scalar_t<B>> q_dicke(int n_sites, int m, const B& backend,
                            CoproductKind kind = CoproductKind::Deformed) {
  check_sites(n_sites);
  if (m < 0 || m > n_sites)
    throw std::invalid_argument("q_dicke: m = " + std::to_string(m) + " outside [0, " + std::to_string(n_sites) + "]");
  const auto raise = delta_matrix(Generator::Raise, n_sites, kind, backend);
  auto state = ground_state(n_sites, backend);
  for (int k = 0; k < m; ++k) state.amplitudes = raise.apply(state.amplitudes);

  const bool deformed = kind == CoproductKind::Deformed;
  scalar_t<B> factorial = backend.one();
  scalar_t<B> binomial = backend.one();
  if constexpr (B::is_exact) {
    factorial = deformed ? q_factorial(m) : QScalar(Rational(1));
    binomial = deformed ? q_binomial(n_sites, m) : QScalar(Rational(1));
    if (!deformed) {
      for (int k = 2; k <= m; ++k) factorial *= QScalar(k);
      Rational c = 1;
      for (int k = 0; k < m; ++k) c = c * (n_sites - k) / (k + 1);
      binomial = QScalar(c);
    }
  } else {
    for (int k = 2; k <= m; ++k) factorial *= deformed ? backend.q_number(k) : static_cast<double>(k);
    for (int k = 0; k < m; ++k)
      binomial *= deformed ? backend.q_number(n_sites - k) / backend.q_number(k + 1)
                           : static_cast<double>(n_sites - k) / (k + 1);
  }

  // divide() throws in the exact backend if [m]_q! fails to divide an amplitude.
  for (auto& a : state.amplitudes) a = backend.divide(a, factorial);
  state.m = m;
  if constexpr (B::is_exact) {
    state.norm_sq = binomial;
  } else {
    const double scale = 1.0 / std::sqrt(binomial);
    for (auto& a : state.amplitudes) a *= scale;
    state.norm_sq = 1.0;
  }
  return state;
}

template <Backend B>
std::vector<QState<scalar_t<B>>> q_symmetric_basis(int n_sites, const B& backend,
                                                   CoproductKind kind = CoproductKind::Deformed) {
  std::vector<QState<scalar_t<B>>> basis;
  basis.reserve(static_cast<std::size_t>(n_sites + 1));
  for (int m = 0; m <= n_sites; ++m) basis.push_back(q_dicke(n_sites, m, backend, kind));
  return basis;
}

/// Classical Dicke state D^m_N (undeformed coproduct).
template <Backend B>
QState<scalar_t<B>> dicke(int n_sites, int m, const B& backend) {
  return q_dicke(n_sites, m, backend, CoproductKind::Undeformed);
}

}  // namespace qsym
