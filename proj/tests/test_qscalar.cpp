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

#include <random>

using namespace qsym;
using qsym::testing::entry;

namespace {

double ratio(int x, double q) {
  if (q == 1.0) return x;
  return (std::pow(q, x / 2.0) - std::pow(q, -x / 2.0)) / (std::pow(q, 0.5) - std::pow(q, -0.5));
}

QScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> expo(-8, 8);
  QScalar x;
  for (int k = 0; k < 4; ++k) x += QScalar(Rational(coeff(rng), den(rng)), expo(rng));
  return x;
}

}  // namespace

TEST(QScalar, CanonicalFormDropsZeros) {
  QScalar a = QScalar(Rational(1), 2) + QScalar(Rational(-1), 2);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(to_string(a), "0");
  QScalar b = QScalar::s_power(3) * QScalar::s_power(-3);
  EXPECT_EQ(b, QScalar(1));
  EXPECT_EQ(b.size(), 1U);
}

TEST(QScalar, QNumberExamples) {
  EXPECT_TRUE(q_number(0).is_zero());
  EXPECT_EQ(q_number(1), QScalar(1));
  // [2]_q = q^(1/2) + q^(-1/2) = s^2 + s^-2
  EXPECT_EQ(q_number(2), entry("q^1/2") + entry("q^-1/2"));
  EXPECT_EQ(q_number(-2), -(entry("q^1/2") + entry("q^-1/2")));
  EXPECT_NEAR(evaluate(q_number(2), 2.0), ratio(2, 2.0), 1e-14);
}

TEST(QScalar, QNumberMatchesDefiningRatio) {
  for (int x = -12; x <= 12; ++x)
    for (double q : {1.0 / 3.0, 0.5, 1.0, 2.0, 3.0}) {
      const double want = ratio(x, q);
      EXPECT_NEAR(evaluate(q_number(x), q), want, 1e-12 * std::max(1.0, std::abs(want))) << "x=" << x << " q=" << q;
    }
  for (int x = -12; x <= 12; ++x) EXPECT_EQ(evaluate_at_one(q_number(x)), Rational(x));
}

TEST(QScalar, FactorialExamples) {
  EXPECT_EQ(q_factorial(0), QScalar(1));
  EXPECT_EQ(q_factorial(2), entry("q^1/2") + entry("q^-1/2"));
  EXPECT_EQ(evaluate_at_one(q_factorial(3)), Rational(6));
  EXPECT_THROW(q_factorial(-1), std::invalid_argument);
}

TEST(QScalar, BinomialExamples) {
  EXPECT_EQ(q_binomial(2, 1), entry("q^1/2") + entry("q^-1/2"));
  EXPECT_EQ(q_binomial(3, 0), QScalar(1));
  EXPECT_EQ(evaluate_at_one(q_binomial(4, 2)), Rational(6));
  EXPECT_THROW(q_binomial(2, 3), std::invalid_argument);
}

TEST(QScalar, BinomialReducesToOrdinaryAtOne) {
  for (int n = 0; n <= 12; ++n) {
    long long c = 1;
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(evaluate_at_one(q_binomial(n, k)), Rational(c)) << n << "," << k;
      c = c * (n - k) / (k + 1);
    }
  }
}

TEST(QScalar, QPascalRule) {
  // [n k] = q^(k/2) [n-1 k] + q^(-(n-k)/2) [n-1 k-1]
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k < n; ++k)
      EXPECT_EQ(q_binomial(n, k), q_binomial(n - 1, k).shifted(2 * k) + q_binomial(n - 1, k - 1).shifted(-2 * (n - k)));
}

TEST(QScalar, InvertQFixesPalindromicQuantities) {
  for (int x = -6; x <= 6; ++x) EXPECT_EQ(invert_q(q_number(x)), q_number(x));
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(invert_q(q_factorial(n)), q_factorial(n));
    for (int k = 0; k <= n; ++k) EXPECT_EQ(invert_q(q_binomial(n, k)), q_binomial(n, k));
  }
  EXPECT_EQ(invert_q(QScalar::s_power(1)), QScalar::s_power(-1));
}

TEST(QScalar, InvertQIsInvolution) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_scalar(rng);
    EXPECT_EQ(invert_q(invert_q(x)), x);
    EXPECT_NEAR(evaluate(invert_q(x), 3.0), evaluate(x, 1.0 / 3.0), 1e-9 * std::max(1.0, magnitude(x) * 100));
  }
}

TEST(QScalar, Evaluate) {
  EXPECT_EQ(evaluate(q_number(2), 1.0), 2.0);
  EXPECT_DOUBLE_EQ(evaluate(entry("q^1/2") + entry("q^-1/2"), 4.0), 2.5);
  EXPECT_EQ(evaluate(QScalar{}, 7.0), 0.0);
  EXPECT_THROW(evaluate(q_number(2), 0.0), std::domain_error);
  EXPECT_THROW(evaluate(q_number(2), -1.0), std::domain_error);
}

TEST(QScalar, EvaluateRational) {
  auto v = evaluate_rational(entry("q") + entry("q^-1"), Rational(2));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, Rational(5, 2));
  EXPECT_FALSE(evaluate_rational(entry("q^1/2"), Rational(2)).has_value());
}

TEST(QScalar, RingLaws) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_scalar(rng);
    const auto b = random_scalar(rng);
    const auto c = random_scalar(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_NEAR(evaluate(a * b, 2.0), evaluate(a, 2.0) * evaluate(b, 2.0), 1e-9 * (1 + magnitude(a) * magnitude(b) * 16));
  }
}

TEST(QScalar, ExactDivision) {
  const auto f = q_factorial(5);
  auto quotient = divide_exact(f, q_number(3));
  ASSERT_TRUE(quotient.has_value());
  EXPECT_EQ(*quotient * q_number(3), f);
  EXPECT_FALSE(divide_exact(QScalar(1), q_number(2)).has_value());
  EXPECT_THROW(divide_exact(QScalar(1), QScalar{}), std::domain_error);
}

TEST(QScalar, CanonicalTextRoundTrip) {
  const QScalar x = QScalar(Rational(-3, 2), -2) + QScalar(Rational(1), 0) + QScalar(Rational(5, 7), 4);
  EXPECT_EQ(to_string(x), "-3/2*s^-2 + 1/1*s^0 + 5/7*s^4");
  EXPECT_EQ(parse_qscalar(to_string(x)), x);
  EXPECT_EQ(parse_qscalar("0"), QScalar{});
  EXPECT_THROW(parse_qscalar("3*q"), std::invalid_argument);
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto y = random_scalar(rng);
    EXPECT_EQ(to_string(parse_qscalar(to_string(y))), to_string(y));
  }
}

TEST(Backend, ExactAndNumericAgree) {
  const ExactBackend e;
  for (double q : {1.0 / 3.0, 0.5, 1.0, 2.0, 3.0}) {
    const NumericBackend nb(q);
    for (int x = -8; x <= 8; ++x) {
      EXPECT_NEAR(evaluate(e.q_number(x), q), nb.q_number(x), 1e-12 * std::max(1.0, std::abs(nb.q_number(x))));
      EXPECT_NEAR(evaluate(e.q_quarter_power(x), q), nb.q_quarter_power(x), 1e-12 * std::max(1.0, nb.q_quarter_power(x)));
    }
    for (int n = 0; n <= 8; ++n) {
      double fact = 1.0;
      for (int k = 2; k <= n; ++k) fact *= nb.q_number(k);
      EXPECT_NEAR(evaluate(q_factorial(n), q), fact, 1e-12 * fact);
    }
  }
}

TEST(Backend, Errors) {
  EXPECT_THROW(NumericBackend(0.0), std::domain_error);
  EXPECT_THROW(NumericBackend(-2.0), std::domain_error);
  const ExactBackend e;
  EXPECT_THROW(e.q_number_half(1), std::domain_error);
  EXPECT_EQ(e.q_number_half(4), q_number(2));
  EXPECT_THROW(e.sqrt(q_number(2)), std::domain_error);
  EXPECT_EQ(e.sqrt(QScalar(Rational(9, 4), 2)), QScalar(Rational(3, 2), 1));
}
