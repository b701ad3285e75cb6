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


#include "golden.hpp"

#include <map>

using namespace qsym;

namespace {

std::map<int, int> multiplicities(const SectorReport& r) {
  std::map<int, int> out;
  for (const auto& s : r.sectors) out[s.two_j] = s.multiplicity;
  return out;
}

}  // namespace

TEST(Spectrum, TwoSitesClassical) {
  const auto r = casimir_sectors(2, 1.0);
  EXPECT_EQ(multiplicities(r), (std::map<int, int>{{2, 1}, {0, 1}}));
  ASSERT_EQ(r.sectors.size(), 2U);
  EXPECT_NEAR(r.sectors[0].casimir_eigenvalue, 2.0, 1e-12);
  EXPECT_NEAR(r.sectors[1].casimir_eigenvalue, 0.0, 1e-12);
}

TEST(Spectrum, FourSitesAtQ2) {
  const auto r = casimir_sectors(4, 2.0);
  EXPECT_EQ(multiplicities(r), (std::map<int, int>{{4, 1}, {2, 3}, {0, 2}}));
  const NumericBackend b(2.0);
  for (const auto& s : r.sectors) {
    const double expected = b.q_number_half(s.two_j) * b.q_number_half(s.two_j + 2);
    EXPECT_NEAR(s.casimir_eigenvalue, expected, 1e-10 * std::max(1.0, expected));
    EXPECT_EQ(s.dimension_check, s.multiplicity * (s.two_j + 1));
  }
}

TEST(Spectrum, ThreeSiteTopEigenvalue) {
  for (double q : {0.5, 2.0}) {
    const auto r = casimir_sectors(3, q);
    ASSERT_FALSE(r.sectors.empty());
    EXPECT_EQ(r.sectors.front().two_j, 3);
    const NumericBackend b(q);
    EXPECT_NEAR(r.sectors.front().casimir_eigenvalue, b.q_number_half(3) * b.q_number_half(5), 1e-10);
  }
}

TEST(Spectrum, SingleSite) {
  const auto r = casimir_sectors(1, 3.0);
  ASSERT_EQ(r.sectors.size(), 1U);
  EXPECT_EQ(r.sectors[0].two_j, 1);
  EXPECT_EQ(r.sectors[0].multiplicity, 1);
}

TEST(Spectrum, MultiplicitiesIndependentOfQAndSumRule) {
  for (int n = 1; n <= 8; ++n) {
    const auto classical = multiplicities(casimir_sectors(n, 1.0));
    for (double q : {0.5, 2.0, 5.0}) {
      const auto r = casimir_sectors(n, q);
      EXPECT_EQ(multiplicities(r), classical) << n << " " << q;
      EXPECT_EQ(static_cast<index_t>(r.total_dimension()), chain_dimension(n));
    }
  }
}

TEST(Spectrum, MultiplicitiesMatchBallotNumbers) {
  // Multiplicity of spin j in N qubits is C(N, N/2 - j) - C(N, N/2 - j - 1).
  auto binom = [](int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return static_cast<int>(c);
  };
  for (int n = 1; n <= 9; ++n)
    for (const auto& s : casimir_sectors(n, 2.0).sectors) {
      const int k = (n - s.two_j) / 2;
      EXPECT_EQ(s.multiplicity, binom(n, k) - binom(n, k - 1)) << n << " " << s.two_j;
    }
}

TEST(Spectrum, RangeChecked) {
  EXPECT_THROW(casimir_sectors(0, 2.0), std::invalid_argument);
  EXPECT_THROW(casimir_sectors(kMaxSpectrumSites + 1, 2.0), std::invalid_argument);
}

TEST(Spectrum, AmbiguousClusteringIsReported) {
  // Near q = 0 the sector eigenvalues crowd together below the tolerance guard.
  EXPECT_THROW(casimir_sectors(4, 1e-12), ClusteringAmbiguity);
}

TEST(SymmetricSector, Examples) {
  const auto r32 = symmetric_sector_check(3, 2.0);
  EXPECT_TRUE(r32.all_pass());
  const auto r41 = symmetric_sector_check(4, 1.0);
  EXPECT_TRUE(r41.all_pass());
  bool compared_classical = false;
  for (const auto& c : r41.checks())
    if (c.identity_name.find("permutation-fixed") != std::string::npos) compared_classical = true;
  EXPECT_TRUE(compared_classical);
  EXPECT_TRUE(symmetric_sector_check(1, 2.0).all_pass());
}

TEST(SymmetricSector, Grid) {
  for (double q : qsym::testing::q_grid())
    for (int n = 1; n <= 7; ++n) EXPECT_TRUE(symmetric_sector_check(n, q).all_pass()) << n << " " << q;
}

TEST(SymmetricSector, FixedSpaceDimension) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(permutation_fixed_space(n).cols(), n + 1);
}
