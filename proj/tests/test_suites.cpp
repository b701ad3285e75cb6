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

TEST(Suites, NamesAndDispatch) {
  const auto& names = suite_names();
  EXPECT_EQ(names.back(), "all");
  EXPECT_THROW(run_suite("nope", 2, ExactBackend{}), std::invalid_argument);
}

TEST(Suites, ExactAllSmallChains) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = run_suite("all", n, ExactBackend{});
    EXPECT_TRUE(r.all_pass()) << n;
    EXPECT_EQ(r.max_residual(), 0.0) << n;
    EXPECT_FALSE(r.checks().empty());
  }
}

TEST(Suites, NumericGrid) {
  for (double q : qsym::testing::q_grid())
    for (int n = 1; n <= 6; ++n) {
      const auto r = run_suite("all", n, NumericBackend(q));
      EXPECT_TRUE(r.all_pass()) << n << " " << q;
      EXPECT_LT(r.max_residual(), 1e-10) << n << " " << q;
    }
}

TEST(Suites, EachSuiteIndividually) {
  for (const auto& name : suite_names()) {
    EXPECT_TRUE(run_suite(name, 3, ExactBackend{}).all_pass()) << name;
    EXPECT_TRUE(run_suite(name, 3, NumericBackend(2.0)).all_pass()) << name;
  }
}

TEST(Suites, DeterministicOrderAndSeed) {
  SuiteOptions opts;
  opts.seed = 99;
  const auto a = run_suite("all", 6, NumericBackend(2.0), opts);
  const auto b = run_suite("all", 6, NumericBackend(2.0), opts);
  ASSERT_EQ(a.checks().size(), b.checks().size());
  for (std::size_t k = 0; k < a.checks().size(); ++k) {
    EXPECT_EQ(a.checks()[k].identity_name, b.checks()[k].identity_name);
    EXPECT_EQ(a.checks()[k].max_residual, b.checks()[k].max_residual);
  }
}

TEST(Suites, NumericFailureIsReported) {
  VerificationReport r;
  r.record(NumericBackend(2.0), "deliberately large", 1.0);
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.failures().size(), 1U);
  VerificationReport exact;
  exact.record(ExactBackend{}, "any nonzero residual fails", 1e-300);
  EXPECT_FALSE(exact.all_pass());
}
