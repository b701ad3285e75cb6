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

/// @file basis.hpp
/// Chain basis conventions shared by every module.
///
/// Sites are numbered 1..N from the left; site 1 is the leftmost tensor
/// factor and owns the most significant bit of a basis index. Each site
/// uses the descending-J³ basis, so bit 0 is |↑⟩ = (1,0) and bit 1 is
/// |↓⟩ = (0,1). For N = 2 the index order is ↑↑, ↑↓, ↓↑, ↓↓.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsym {

/// Site 1 is the most significant bit of a chain index.
inline constexpr bool kSiteOneIsMostSignificant = true;

using index_t = std::size_t;

inline constexpr int kMaxSites = 24;

inline void check_sites(int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("number of sites must be >= 1");
  if (n_sites > kMaxSites) throw std::invalid_argument("number of sites exceeds " + std::to_string(kMaxSites));
}

inline index_t chain_dimension(int n_sites) { return index_t{1} << n_sites; }

/// Bit position of a 1-based site.
inline int site_shift(int site, int n_sites) {
  return kSiteOneIsMostSignificant ? n_sites - site : site - 1;
}

/// 0 for ↑, 1 for ↓.
inline int site_bit(index_t index, int site, int n_sites) {
  return static_cast<int>((index >> site_shift(site, n_sites)) & 1U);
}

inline bool is_up(index_t index, int site, int n_sites) { return site_bit(index, site, n_sites) == 0; }

/// 2·J³ eigenvalue of one site: +1 for ↑, -1 for ↓.
inline int site_two_m(index_t index, int site, int n_sites) {
  return is_up(index, site, n_sites) ? 1 : -1;
}

/// 2·J³ eigenvalue of the whole chain state: #↑ − #↓.
inline int chain_two_m(index_t index, int n_sites) {
  int total = 0;
  for (int s = 1; s <= n_sites; ++s) total += site_two_m(index, s, n_sites);
  return total;
}

inline index_t flip_site(index_t index, int site, int n_sites) {
  return index ^ (index_t{1} << site_shift(site, n_sites));
}

inline index_t set_site_bit(index_t index, int site, int n_sites, int bit) {
  const index_t mask = index_t{1} << site_shift(site, n_sites);
  return bit ? (index | mask) : (index & ~mask);
}

/// Human-readable arrows, e.g. "↑↓↓".
inline std::string basis_label(index_t index, int n_sites) {
  std::string out;
  for (int s = 1; s <= n_sites; ++s) out += is_up(index, s, n_sites) ? "↑" : "↓";
  return out;
}

}  // namespace qsym
