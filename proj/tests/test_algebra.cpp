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

using namespace qsym;
using qsym::testing::entry;
using qsym::testing::matrix;

TEST(Algebra, FundamentalGeneratorsArePauliConstruction) {
  const ExactBackend e;
  const auto g = generators(kFundamental, e);
  EXPECT_EQ(g.jplus, matrix({{"0", "1"}, {"0", "0"}}));
  EXPECT_EQ(g.jminus, matrix({{"0", "0"}, {"1", "0"}}));
  EXPECT_EQ(g.j3, matrix({{"1/2", "0"}, {"0", "-1/2"}}));
  EXPECT_EQ(g.kplus, matrix({{"q^1/4", "0"}, {"0", "q^-1/4"}}));
  EXPECT_EQ(g.kminus, matrix({{"q^-1/4", "0"}, {"0", "q^1/4"}}));
}

TEST(Algebra, SpinOneEntryAtQ2) {
  const NumericBackend nb(2.0);
  const auto g = generators(IrrepLabel{2}, nb);
  // sqrt([1]_2 [2]_2) with [2]_2 = sqrt(2) + 1/sqrt(2)
  const double want = std::sqrt(std::sqrt(2.0) + 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(g.jplus.at(0, 1), want, 1e-12);
  EXPECT_NEAR(g.jplus.at(0, 1), 1.456475, 1e-6);
  EXPECT_EQ(g.j3.diagonal_values(), (std::vector<double>{1.0, 0.0, -1.0}));
}

TEST(Algebra, ExactRejectsHigherSpin) {
  const ExactBackend e;
  EXPECT_THROW(generators(IrrepLabel{2}, e), std::domain_error);
  EXPECT_THROW(casimir(IrrepLabel{3}, e), std::domain_error);
}

TEST(Algebra, CasimirAtQ1IsJJPlusOne) {
  const NumericBackend one(1.0);
  const auto c = casimir(kFundamental, one);
  EXPECT_LT(residual(c, SparseOperator<double>::identity(2, 0.75)), 1e-15);
}

TEST(Algebra, CasimirOrderingsAgreeAtQ4) {
  const NumericBackend nb(4.0);
  const auto c1 = casimir(kFundamental, nb, CasimirOrdering::LowerRaise);
  const auto c2 = casimir(kFundamental, nb, CasimirOrdering::RaiseLower);
  EXPECT_LT(residual(c1, c2), 1e-12);
  const double want = nb.q_number_half(1) * nb.q_number_half(3);
  EXPECT_LT(residual(c1, SparseOperator<double>::identity(2, want)), 1e-12);
}

TEST(Algebra, CasimirSpinThreeHalves) {
  const NumericBackend nb(2.0);
  const auto c = casimir(IrrepLabel{3}, nb);
  const double want = nb.q_number_half(3) * nb.q_number_half(5);
  EXPECT_LT(residual(c, SparseOperator<double>::identity(4, want)), 1e-12);
}

TEST(Algebra, ScaledCasimirIsExactAtSpinHalf) {
  const ExactBackend e;
  const auto c = scaled_casimir(kFundamental, e);
  const auto want = scaled_casimir_eigenvalue(kFundamental, e);
  EXPECT_EQ(c, SparseOperator<QScalar>::identity(2, want));
  // α²[1/2]_q[3/2]_q = (q^(1/4) - q^(-1/4))(q^(3/4) - q^(-3/4))
  EXPECT_EQ(want, (entry("q^1/4") - entry("q^-1/4")) * (entry("q^3/4") - entry("q^-3/4")));
}

TEST(Algebra, SiteRelationsExactFundamental) {
  const auto report = verify_site_relations(kFundamental, ExactBackend{});
  EXPECT_TRUE(report.all_pass());
  EXPECT_EQ(report.max_residual(), 0.0);
}

TEST(Algebra, SiteRelationsNumeric) {
  for (double q : {0.5, 2.0})
    for (int two_j : {1, 2, 3, 4}) {
      const auto report = verify_site_relations(IrrepLabel{two_j}, NumericBackend(q, 1e-12));
      EXPECT_TRUE(report.all_pass()) << "q=" << q << " two_j=" << two_j;
    }
}

TEST(Algebra, UndeformedCommutatorAtQ1) {
  const NumericBackend one(1.0);
  const auto g = generators(kFundamental, one);
  EXPECT_LT(residual(commutator(g.jplus, g.jminus), g.j3 * 2.0), 1e-15);
}

TEST(Algebra, ClassicalLimitSpinOne) {
  const auto g = generators(IrrepLabel{2}, NumericBackend(1.0));
  EXPECT_NEAR(g.jplus.at(0, 1), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(g.jplus.at(1, 2), std::sqrt(2.0), 1e-15);
}
