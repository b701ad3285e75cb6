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

/// @file coproduct.hpp
/// N-fold coproducts of the generators on a chain of fundamental sites.
///
/// Deformed raising/lowering operators carry K⁻ = q^(-J³/2) on every site
/// to the left of the acting site and K⁺ = q^(J³/2) on every site to its
/// right:
///
///   Δ⁽ᴺ⁾(J±) = Σᵢ K⁻ ⊗ … ⊗ K⁻ ⊗ J±ᵢ ⊗ K⁺ ⊗ … ⊗ K⁺.
///
/// Coproduct outputs keep their decomposition into tensor words next to the
/// assembled matrix; delta_insert rewrites one letter of every word by its
/// two-site coproduct, which is how coassociativity is checked.

#include "qsym/algebra.hpp"
#include "qsym/backend.hpp"
#include "qsym/basis.hpp"
#include "qsym/sparse.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsym {

enum class CoproductKind { Undeformed, Deformed };

/// Single-site letters of a tensor word.
enum class Letter : std::uint8_t { Identity, Raise, Lower, Weight, KPlus, KMinus };

template <class S>
struct TensorWord {
  S coeff;
  std::vector<Letter> letters;
};

template <class S>
struct CoproductOperator {
  int n_sites = 0;
  CoproductKind kind = CoproductKind::Deformed;
  std::vector<TensorWord<S>> words;
  SparseOperator<S> matrix;
};

/// 2x2 matrix of a letter in the fundamental representation.
template <Backend B>
SparseOperator<scalar_t<B>> letter_matrix(Letter letter, const B& backend) {
  using S = scalar_t<B>;
  SparseOperator<S> m(2);
  switch (letter) {
    case Letter::Identity: return SparseOperator<S>::identity(2, backend.one());
    case Letter::Raise: m.set(0, 1, backend.one()); break;
    case Letter::Lower: m.set(1, 0, backend.one()); break;
    case Letter::Weight:
      m.set(0, 0, backend.from_ratio(1, 2));
      m.set(1, 1, backend.from_ratio(-1, 2));
      break;
    case Letter::KPlus:
      m.set(0, 0, backend.q_quarter_power(1));
      m.set(1, 1, backend.q_quarter_power(-1));
      break;
    case Letter::KMinus:
      m.set(0, 0, backend.q_quarter_power(-1));
      m.set(1, 1, backend.q_quarter_power(1));
      break;
  }
  return m;
}

/// Two-site coproduct image of a single letter, as (left, right) terms with unit coefficients.
inline std::vector<std::pair<Letter, Letter>> letter_coproduct(Letter letter, CoproductKind kind) {
  const bool deformed = kind == CoproductKind::Deformed;
  switch (letter) {
    case Letter::Identity: return {{Letter::Identity, Letter::Identity}};
    case Letter::Weight: return {{Letter::Weight, Letter::Identity}, {Letter::Identity, Letter::Weight}};
    case Letter::KPlus: return {{Letter::KPlus, Letter::KPlus}};
    case Letter::KMinus: return {{Letter::KMinus, Letter::KMinus}};
    case Letter::Raise:
    case Letter::Lower:
      if (deformed) return {{letter, Letter::KPlus}, {Letter::KMinus, letter}};
      return {{letter, Letter::Identity}, {Letter::Identity, letter}};
  }
  return {};
}

/// Kronecker assembly of a sum of tensor words.
template <Backend B>
SparseOperator<scalar_t<B>> assemble_words(const std::vector<TensorWord<scalar_t<B>>>& words, int n_sites,
                                           const B& backend) {
  check_sites(n_sites);
  using S = scalar_t<B>;
  SparseOperator<S> total(chain_dimension(n_sites));
  for (const auto& w : words) {
    if (static_cast<int>(w.letters.size()) != n_sites) throw std::invalid_argument("tensor word length mismatch");
    SparseOperator<S> term = letter_matrix(w.letters.front(), backend);
    for (std::size_t k = 1; k < w.letters.size(); ++k) term = kron(term, letter_matrix(w.letters[k], backend));
    total += term * w.coeff;
  }
  return total;
}

namespace detail {

template <Backend B>
std::vector<TensorWord<scalar_t<B>>> coproduct_words(Generator g, int n_sites, CoproductKind kind, const B& backend) {
  std::vector<TensorWord<scalar_t<B>>> words;
  const Letter acting = g == Generator::Raise ? Letter::Raise : g == Generator::Lower ? Letter::Lower : Letter::Weight;
  const bool dressed = g != Generator::Weight && kind == CoproductKind::Deformed;
  for (int site = 1; site <= n_sites; ++site) {
    std::vector<Letter> letters(static_cast<std::size_t>(n_sites), Letter::Identity);
    for (int k = 1; k <= n_sites; ++k) {
      if (k == site)
        letters[static_cast<std::size_t>(k - 1)] = acting;
      else if (dressed)
        letters[static_cast<std::size_t>(k - 1)] = k < site ? Letter::KMinus : Letter::KPlus;
    }
    words.push_back({backend.one(), std::move(letters)});
  }
  return words;
}

}  // namespace detail

/// Δ⁽ᴺ⁾ of a generator, assembled directly on basis states.
template <Backend B>
CoproductOperator<scalar_t<B>> delta_n(Generator g, int n_sites, CoproductKind kind, const B& backend) {
  if (n_sites < 1) throw std::invalid_argument("delta_n: N must be >= 1");
  check_sites(n_sites);
  using S = scalar_t<B>;
  const index_t dim = chain_dimension(n_sites);
  SparseOperator<S> m(dim);

  if (g == Generator::Weight) {
    for (index_t col = 0; col < dim; ++col) m.set(col, col, backend.from_ratio(chain_two_m(col, n_sites), 2));
  } else {
    // J⁺ needs a ↓ at the acting site, J⁻ an ↑; both have unit matrix element.
    const int needed_bit = g == Generator::Raise ? 1 : 0;
    const bool deformed = kind == CoproductKind::Deformed;
    for (index_t col = 0; col < dim; ++col) {
      for (int site = 1; site <= n_sites; ++site) {
        if (site_bit(col, site, n_sites) != needed_bit) continue;
        // K⁻ on the left sites contributes q^(-2m/4), K⁺ on the right q^(+2m/4).
        int quarter = 0;
        if (deformed) {
          for (int k = 1; k < site; ++k) quarter -= site_two_m(col, k, n_sites);
          for (int k = site + 1; k <= n_sites; ++k) quarter += site_two_m(col, k, n_sites);
        }
        m.add(flip_site(col, site, n_sites), col, backend.q_quarter_power(quarter));
      }
    }
  }
  return {n_sites, kind, detail::coproduct_words(g, n_sites, kind, backend), std::move(m)};
}

template <Backend B>
SparseOperator<scalar_t<B>> delta_matrix(Generator g, int n_sites, CoproductKind kind, const B& backend) {
  return delta_n(g, n_sites, kind, backend).matrix;
}

/// Apply the two-site coproduct at `site` (1-based) of an (N-1)-site operator.
template <Backend B>
CoproductOperator<scalar_t<B>> delta_insert(const CoproductOperator<scalar_t<B>>& op, int site, const B& backend) {
  if (op.words.empty())
    throw std::invalid_argument("delta_insert: operator has no tracked tensor-word decomposition");
  if (site < 1 || site > op.n_sites) throw std::out_of_range("delta_insert: site out of range");
  using S = scalar_t<B>;
  std::vector<TensorWord<S>> words;
  for (const auto& w : op.words) {
    const Letter split = w.letters[static_cast<std::size_t>(site - 1)];
    for (const auto& [left, right] : letter_coproduct(split, op.kind)) {
      TensorWord<S> out{w.coeff, {}};
      out.letters.reserve(w.letters.size() + 1);
      for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (static_cast<int>(k) == site - 1) {
          out.letters.push_back(left);
          out.letters.push_back(right);
        } else {
          out.letters.push_back(w.letters[k]);
        }
      }
      words.push_back(std::move(out));
    }
  }
  const int n = op.n_sites + 1;
  auto matrix = assemble_words(words, n, backend);
  return {n, op.kind, std::move(words), std::move(matrix)};
}

/// Δ⁽ᴺ⁾(J⁺)Δ⁽ᴺ⁾(J⁻) + [Δ⁽ᴺ⁾(J³)]_q [Δ⁽ᴺ⁾(J³) − 1]_q for the deformed coproduct.
///
/// The diagonal part needs [m]_q at m = (#↑ − #↓)/2, which is half-integer
/// for odd N; the exact backend therefore only accepts even N.
template <Backend B>
SparseOperator<scalar_t<B>> chain_casimir(int n_sites, const B& backend,
                                          CoproductKind kind = CoproductKind::Deformed) {
  const auto jp = delta_matrix(Generator::Raise, n_sites, kind, backend);
  const auto jm = delta_matrix(Generator::Lower, n_sites, kind, backend);
  auto out = jp * jm;
  const index_t dim = chain_dimension(n_sites);
  for (index_t i = 0; i < dim; ++i) {
    const int two_m = chain_two_m(i, n_sites);
    auto w = kind == CoproductKind::Deformed
                 ? backend.q_number_half(two_m) * backend.q_number_half(two_m - 2)
                 : backend.from_ratio(two_m, 2) * backend.from_ratio(two_m - 2, 2);
    out.add(i, i, w);
  }
  return out;
}

/// α² times the deformed chain Casimir. Exact for every N, including odd N
/// where chain_casimir itself leaves the ring.
template <Backend B>
SparseOperator<scalar_t<B>> scaled_chain_casimir(int n_sites, const B& backend) {
  const auto jp = delta_matrix(Generator::Raise, n_sites, CoproductKind::Deformed, backend);
  const auto jm = delta_matrix(Generator::Lower, n_sites, CoproductKind::Deformed, backend);
  const auto alpha = alpha_q_number_half(2, backend);
  auto out = jp * jm * (alpha * alpha);
  const index_t dim = chain_dimension(n_sites);
  for (index_t i = 0; i < dim; ++i) {
    const int two_m = chain_two_m(i, n_sites);
    out.add(i, i, alpha_q_number_half(two_m, backend) * alpha_q_number_half(two_m - 2, backend));
  }
  return out;
}

}  // namespace qsym
