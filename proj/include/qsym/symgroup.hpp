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

/// @file symgroup.hpp
/// Permutations of the chain and their ordinary and q-deformed
/// representations.
///
/// W(σ) moves the content of site k to site σ(k), so W(σ)W(ρ) = W(σ∘ρ).
/// A word (a₁, …, a_M) of adjacent transpositions denotes
/// t_{a_M} ∘ … ∘ t_{a₁}: a₁ acts first.
///
/// The q-transposition is W^q_i = C^q_i W_i with C^q_i = q^(-J³/2) on site i
/// and q^(J³/2) on site i+1. A product of q-transpositions equals
/// C(σ) W(σ) where C(σ) = ⊗ᵢ q^(J³ Mᵢ / 2) and Mᵢ counts, for the strand
/// that ends at site i, its moves toward larger site index minus its moves
/// toward smaller site index.

#include "qsym/backend.hpp"
#include "qsym/basis.hpp"
#include "qsym/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

class Permutation {
 public:
  Permutation() = default;

  /// One-line notation with 1-based images: images[k-1] = σ(k).
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("permutation images must be a bijection of {1..N}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  /// t_i swaps i and i+1.
  static Permutation transposition(int i, int n) {
    if (i < 1 || i >= n) throw std::out_of_range("transposition index out of range");
    auto p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
    return p;
  }

  /// τ(i) = N + 1 − i.
  static Permutation reversal(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) img[static_cast<std::size_t>(k - 1)] = n + 1 - k;
    return Permutation(std::move(img));
  }

  /// Composition of a word; the first letter acts first.
  static Permutation from_word(std::span<const int> word, int n) {
    auto p = identity(n);
    for (int a : word) p = transposition(a, n) * p;
    return p;
  }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  [[nodiscard]] const std::vector<int>& images() const noexcept { return images_; }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int k = 1; k <= size(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Permutation(std::move(inv));
  }

  /// (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(a.images_.size());
    for (int k = 1; k <= a.size(); ++k) img[static_cast<std::size_t>(k - 1)] = a(b(k));
    return Permutation(std::move(img));
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;

  [[nodiscard]] int inversions() const {
    int count = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (images_[static_cast<std::size_t>(a)] > images_[static_cast<std::size_t>(b)]) ++count;
    return count;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(images_[k]);
    }
    return out + "]";
  }

 private:
  std::vector<int> images_;
};

enum class WordStrategy {
  BubbleDescent,  ///< repeatedly swap the leftmost descent
  RightmostDescent,  ///< repeatedly swap the rightmost descent
};

/// A reduced word for σ (length = number of inversions).
inline std::vector<int> reduced_word(const Permutation& sigma, WordStrategy strategy = WordStrategy::BubbleDescent) {
  // arrangement[p] = strand sitting at position p+1 after σ, i.e. σ⁻¹(p+1).
  std::vector<int> arrangement = sigma.inverse().images();
  std::vector<int> sorting_swaps;
  const int n = sigma.size();
  for (;;) {
    int descent = -1;
    if (strategy == WordStrategy::BubbleDescent) {
      for (int p = 0; p + 1 < n && descent < 0; ++p)
        if (arrangement[static_cast<std::size_t>(p)] > arrangement[static_cast<std::size_t>(p + 1)]) descent = p;
    } else {
      for (int p = n - 2; p >= 0 && descent < 0; --p)
        if (arrangement[static_cast<std::size_t>(p)] > arrangement[static_cast<std::size_t>(p + 1)]) descent = p;
    }
    if (descent < 0) break;
    std::swap(arrangement[static_cast<std::size_t>(descent)], arrangement[static_cast<std::size_t>(descent + 1)]);
    sorting_swaps.push_back(descent + 1);
  }
  // The swaps sort σ's arrangement back to the identity; σ is their reverse.
  std::reverse(sorting_swaps.begin(), sorting_swaps.end());
  return sorting_swaps;
}

/// All permutations of {1..N} in lexicographic order of their one-line form.
inline std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("all_permutations: N must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

struct CrossingDiagram {
  int strands = 0;
  std::vector<int> word;
  std::vector<int> m_counts;  ///< m_counts[i-1] = M for the strand ending at site i
  Permutation permutation;
};

inline CrossingDiagram crossing_counts(std::span<const int> word, int n) {
  if (n < 1) throw std::invalid_argument("crossing_counts: N must be >= 1");
  std::vector<int> at(static_cast<std::size_t>(n));  // strand currently at each position
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> per_strand(static_cast<std::size_t>(n), 0);
  for (int a : word) {
    if (a < 1 || a >= n) throw std::out_of_range("crossing word letter out of range");
    auto& upper = at[static_cast<std::size_t>(a - 1)];
    auto& lower = at[static_cast<std::size_t>(a)];
    ++per_strand[static_cast<std::size_t>(upper)];  // moves from a to a+1
    --per_strand[static_cast<std::size_t>(lower)];  // moves from a+1 to a
    std::swap(upper, lower);
  }
  CrossingDiagram d{n, std::vector<int>(word.begin(), word.end()), std::vector<int>(static_cast<std::size_t>(n)),
                    Permutation::from_word(word, n)};
  for (int p = 0; p < n; ++p)
    d.m_counts[static_cast<std::size_t>(p)] = per_strand[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])];
  return d;
}

/// W(σ): basis state with site k in spin b_k goes to the state with site σ(k) in spin b_k.
template <Backend B>
SparseOperator<scalar_t<B>> perm_rep(const Permutation& sigma, const B& backend) {
  const int n = sigma.size();
  check_sites(n);
  const index_t dim = chain_dimension(n);
  SparseOperator<scalar_t<B>> w(dim);
  for (index_t col = 0; col < dim; ++col) {
    index_t row = 0;
    for (int k = 1; k <= n; ++k) row = set_site_bit(row, sigma(k), n, site_bit(col, k, n));
    w.set(row, col, backend.one());
  }
  return w;
}

/// Diagonal ⊗ᵢ q^(J³ Mᵢ / 2) for per-site counts M.
template <Backend B>
SparseOperator<scalar_t<B>> crossing_factor(std::span<const int> m_counts, const B& backend) {
  const int n = static_cast<int>(m_counts.size());
  check_sites(n);
  const index_t dim = chain_dimension(n);
  std::vector<scalar_t<B>> diag(dim);
  for (index_t i = 0; i < dim; ++i) {
    int quarter = 0;  // q^(mᵢ Mᵢ / 2) with mᵢ = ±1/2 is q^(±Mᵢ/4)
    for (int s = 1; s <= n; ++s) quarter += site_two_m(i, s, n) * m_counts[static_cast<std::size_t>(s - 1)];
    diag[i] = backend.q_quarter_power(quarter);
  }
  return SparseOperator<scalar_t<B>>::diagonal(diag);
}

/// C^q_i = q^(-J³/2) on site i, q^(J³/2) on site i+1.
template <Backend B>
SparseOperator<scalar_t<B>> c_q(int i, int n, const B& backend) {
  if (i < 1 || i >= n) throw std::out_of_range("q-transposition index out of range");
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  counts[static_cast<std::size_t>(i - 1)] = -1;
  counts[static_cast<std::size_t>(i)] = 1;
  return crossing_factor(counts, backend);
}

template <Backend B>
SparseOperator<scalar_t<B>> q_transposition(int i, int n, const B& backend) {
  return c_q(i, n, backend) * perm_rep(Permutation::transposition(i, n), backend);
}

/// W^q(σ) = C(σ) W(σ), with C(σ) read off the crossing counts of a reduced word.
template <Backend B>
SparseOperator<scalar_t<B>> q_perm_rep(const Permutation& sigma, const B& backend) {
  const auto word = reduced_word(sigma);
  const auto diagram = crossing_counts(word, sigma.size());
  return crossing_factor(diagram.m_counts, backend) * perm_rep(sigma, backend);
}

/// Product of q-transpositions along a word (first letter acts first).
template <Backend B>
SparseOperator<scalar_t<B>> q_perm_rep_from_word(std::span<const int> word, int n, const B& backend) {
  check_sites(n);
  auto out = SparseOperator<scalar_t<B>>::identity(chain_dimension(n), backend.one());
  for (int a : word) out = q_transposition(a, n, backend) * out;
  return out;
}

/// C(τ) = q^(-½ Σᵢ (N+1-2i) J³ᵢ).
template <Backend B>
SparseOperator<scalar_t<B>> c_tau(int n, const B& backend) {
  check_sites(n);
  std::vector<int> counts(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) counts[static_cast<std::size_t>(i - 1)] = -(n + 1 - 2 * i);
  return crossing_factor(counts, backend);
}

}  // namespace qsym
