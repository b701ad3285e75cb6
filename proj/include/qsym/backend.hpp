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

/// @file backend.hpp
/// Scalar backends. Every construction in the library is a template over a
/// backend, which supplies the scalar type and the few q-dependent
/// primitives (quarter powers of q, q-numbers, square roots).
///
///  - ExactBackend: QScalar, symbolic q. Quantities that would leave the
///    Laurent ring (half-integer q-numbers, irrational square roots) throw
///    std::domain_error.
///  - NumericBackend: double at a fixed q > 0.

#include "qsym/qscalar.hpp"

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

struct ExactBackend {
  using scalar_type = QScalar;
  static constexpr bool is_exact = true;

  [[nodiscard]] QScalar zero() const { return {}; }
  [[nodiscard]] QScalar one() const { return QScalar(1); }
  [[nodiscard]] QScalar from_int(long long v) const { return QScalar(Rational(v)); }
  [[nodiscard]] QScalar from_ratio(long long num, long long den) const {
    return QScalar(Rational(num, den));
  }

  /// q^(k/4)
  [[nodiscard]] QScalar q_quarter_power(int k) const { return QScalar::s_power(k); }

  [[nodiscard]] QScalar q_number(int x) const { return qsym::q_number(x); }

  /// [two_x / 2]_q; only integer arguments stay in the ring.
  [[nodiscard]] QScalar q_number_half(int two_x) const {
    if (two_x % 2 != 0)
      throw std::domain_error("exact backend: half-integer q-number [" + std::to_string(two_x) +
                              "/2]_q is not a Laurent polynomial in q^(1/4)");
    return qsym::q_number(two_x / 2);
  }

  [[nodiscard]] QScalar divide(const QScalar& a, const QScalar& b) const {
    auto out = divide_exact(a, b);
    if (!out) throw std::domain_error("exact backend: inexact division " + to_string(a) + " / " + to_string(b));
    return *out;
  }

  /// Square root of a perfect-square monomial.
  [[nodiscard]] QScalar sqrt(const QScalar& x) const {
    if (x.is_zero()) return x;
    if (x.size() == 1) {
      const auto& [k, c] = *x.terms().begin();
      const BigInt num = boost::multiprecision::numerator(c);
      const BigInt den = boost::multiprecision::denominator(c);
      if (k % 2 == 0 && num > 0) {
        const BigInt rn = boost::multiprecision::sqrt(num);
        const BigInt rd = boost::multiprecision::sqrt(den);
        if (rn * rn == num && rd * rd == den) return QScalar(Rational(rn, rd), k / 2);
      }
    }
    throw std::domain_error("exact backend: square root of " + to_string(x) + " is not in the ring");
  }

  [[nodiscard]] double tolerance() const { return 0.0; }
  [[nodiscard]] std::string name() const { return "exact"; }
  [[nodiscard]] std::vector<double> q_values() const { return {}; }
};

struct NumericBackend {
  using scalar_type = double;
  static constexpr bool is_exact = false;

  explicit NumericBackend(double q_value, double tol = 1e-10) : q(q_value), tol(tol) {
    if (!(q > 0.0) || !std::isfinite(q)) throw std::domain_error("numeric backend requires q > 0");
  }

  double q;
  double tol;

  [[nodiscard]] double zero() const { return 0.0; }
  [[nodiscard]] double one() const { return 1.0; }
  [[nodiscard]] double from_int(long long v) const { return static_cast<double>(v); }
  [[nodiscard]] double from_ratio(long long num, long long den) const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  [[nodiscard]] double q_quarter_power(int k) const {
    if (k == 0) return 1.0;
    return std::pow(q, 0.25 * k);
  }

  /// sinh form of [x]_q; exact limit x at q = 1.
  [[nodiscard]] double q_number_real(double x) const {
    const double h = 0.5 * std::log(q);
    if (h == 0.0) return x;
    return std::sinh(x * h) / std::sinh(h);
  }
  [[nodiscard]] double q_number(int x) const { return q_number_real(static_cast<double>(x)); }
  [[nodiscard]] double q_number_half(int two_x) const { return q_number_real(0.5 * two_x); }

  [[nodiscard]] double divide(double a, double b) const {
    if (b == 0.0) throw std::domain_error("numeric backend: division by zero");
    return a / b;
  }
  [[nodiscard]] double sqrt(double x) const {
    if (x < 0.0) throw std::domain_error("numeric backend: square root of negative value");
    return std::sqrt(x);
  }

  [[nodiscard]] double tolerance() const { return tol; }
  [[nodiscard]] std::string name() const { return "numeric"; }
  [[nodiscard]] std::vector<double> q_values() const { return {q}; }

  /// Same backend at 1/q.
  [[nodiscard]] NumericBackend inverted() const { return NumericBackend(1.0 / q, tol); }
};

template <class B>
concept Backend = requires(const B& b, const typename B::scalar_type& x) {
  typename B::scalar_type;
  { B::is_exact } -> std::convertible_to<bool>;
  { b.zero() } -> std::same_as<typename B::scalar_type>;
  { b.one() } -> std::same_as<typename B::scalar_type>;
  { b.q_quarter_power(1) } -> std::same_as<typename B::scalar_type>;
  { b.q_number(1) } -> std::same_as<typename B::scalar_type>;
  { b.q_number_half(1) } -> std::same_as<typename B::scalar_type>;
  { b.divide(x, x) } -> std::same_as<typename B::scalar_type>;
  { b.sqrt(x) } -> std::same_as<typename B::scalar_type>;
  { b.tolerance() } -> std::convertible_to<double>;
};

template <Backend B>
using scalar_t = typename B::scalar_type;

/// Evaluate an exact scalar in the numeric backend.
inline double lower(const NumericBackend& b, const QScalar& x) { return evaluate(x, b.q); }

static_assert(Backend<ExactBackend>);
static_assert(Backend<NumericBackend>);

}  // namespace qsym
