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

/// @file qscalar.hpp
/// Exact scalars for q-dependent quantities.
///
/// Every exact quantity in the library is a Laurent polynomial in
/// s = q^(1/4) with rational coefficients. Quarter powers of q are needed
/// because single-site weights are q^(±J³/2) with J³ = ±1/2, so a q-Dicke
/// amplitude such as q^(-1/4) is the monomial s^-1.
///
/// Canonical form: the term map never stores a zero coefficient, so two
/// scalars are equal iff their term maps are equal.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsym {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class QScalar {
 public:
  using term_map = std::map<int, Rational>;

  QScalar() = default;
  QScalar(int value) : QScalar(Rational(value), 0) {}  // NOLINT(implicit)
  explicit QScalar(const Rational& value) : QScalar(value, 0) {}

  /// c * s^k
  QScalar(const Rational& coeff, int exponent) {
    if (coeff != 0) terms_.emplace(exponent, coeff);
  }

  /// s^k = q^(k/4)
  static QScalar s_power(int exponent) { return QScalar(Rational(1), exponent); }

  [[nodiscard]] const term_map& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  [[nodiscard]] int min_exponent() const {
    if (is_zero()) throw std::domain_error("min_exponent of zero scalar");
    return terms_.begin()->first;
  }
  [[nodiscard]] int max_exponent() const {
    if (is_zero()) throw std::domain_error("max_exponent of zero scalar");
    return terms_.rbegin()->first;
  }

  /// Coefficient of s^k (zero when absent).
  [[nodiscard]] Rational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  QScalar& operator+=(const QScalar& rhs) {
    for (const auto& [k, c] : rhs.terms_) accumulate(k, c);
    return *this;
  }
  QScalar& operator-=(const QScalar& rhs) {
    for (const auto& [k, c] : rhs.terms_) accumulate(k, -c);
    return *this;
  }
  QScalar& operator*=(const QScalar& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend QScalar operator+(QScalar lhs, const QScalar& rhs) { return lhs += rhs; }
  friend QScalar operator-(QScalar lhs, const QScalar& rhs) { return lhs -= rhs; }
  friend QScalar operator-(QScalar x) {
    for (auto& [k, c] : x.terms_) c = -c;
    return x;
  }
  friend QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.accumulate(ka + kb, ca * cb);
    return out;
  }
  friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  /// Multiply by s^k.
  [[nodiscard]] QScalar shifted(int exponent) const {
    QScalar out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k + exponent, c);
    return out;
  }

 private:
  void accumulate(int exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  term_map terms_;
};

inline bool is_zero(const QScalar& x) noexcept { return x.is_zero(); }
inline bool is_zero(double x) noexcept { return x == 0.0; }

/// Sum of absolute coefficients; a norm on the ring, zero iff x == 0.
inline double magnitude(const QScalar& x) {
  double total = 0.0;
  for (const auto& [k, c] : x.terms()) total += std::abs(c.convert_to<double>());
  return total;
}
inline double magnitude(double x) noexcept { return std::abs(x); }

/// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
inline std::optional<QScalar> divide_exact(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero scalar");
  if (a.is_zero()) return QScalar{};

  // a = s^ka A(s), b = s^kb B(s) with A(0), B(0) nonzero; s does not divide B,
  // so a/b is Laurent iff B divides A as ordinary polynomials.
  const int ka = a.min_exponent();
  const int kb = b.min_exponent();
  const int deg_b = b.max_exponent() - kb;
  std::vector<Rational> rem(static_cast<std::size_t>(a.max_exponent() - ka + 1));
  for (const auto& [k, c] : a.terms()) rem[static_cast<std::size_t>(k - ka)] = c;
  std::vector<Rational> den(static_cast<std::size_t>(deg_b + 1));
  for (const auto& [k, c] : b.terms()) den[static_cast<std::size_t>(k - kb)] = c;

  const int deg_a = static_cast<int>(rem.size()) - 1;
  if (deg_a < deg_b) return std::nullopt;
  QScalar quotient;
  const Rational& lead = den.back();
  for (int d = deg_a; d >= deg_b; --d) {
    const Rational c = rem[static_cast<std::size_t>(d)] / lead;
    if (c == 0) continue;
    const int shift = d - deg_b;
    for (int i = 0; i <= deg_b; ++i)
      rem[static_cast<std::size_t>(shift + i)] -= c * den[static_cast<std::size_t>(i)];
    quotient += QScalar(c, shift + ka - kb);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return quotient;
}

/// [x]_q as the expanded geometric sum  sign(x) Σ_{k<|x|} q^((|x|-1-2k)/2).
inline QScalar q_number(int x) {
  QScalar out;
  const int n = std::abs(x);
  const Rational sign = x < 0 ? Rational(-1) : Rational(1);
  for (int k = 0; k < n; ++k) out += QScalar(sign, 2 * (n - 1 - 2 * k));
  return out;
}

inline QScalar q_factorial(int m) {
  if (m < 0) throw std::invalid_argument("q_factorial: m must be non-negative");
  QScalar out(1);
  for (int k = 2; k <= m; ++k) out *= q_number(k);
  return out;
}

inline QScalar q_binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial: arguments must be non-negative");
  if (k > n) throw std::invalid_argument("q_binomial: k > n");
  auto quotient = divide_exact(q_factorial(n), q_factorial(n - k) * q_factorial(k));
  if (!quotient) throw std::logic_error("q_binomial: quotient left the Laurent ring");
  return *quotient;
}

/// The q -> 1/q substitution, s^k -> s^-k.
inline QScalar invert_q(const QScalar& x) {
  QScalar out;
  for (const auto& [k, c] : x.terms()) out += QScalar(c, -k);
  return out;
}

/// Substitute the positive real fourth root s = q^(1/4).
inline double evaluate(const QScalar& x, double q) {
  if (!(q > 0.0)) throw std::domain_error("evaluate: q must be positive");
  double total = 0.0;
  for (const auto& [k, c] : x.terms()) total += c.convert_to<double>() * std::pow(q, 0.25 * k);
  return total;
}

/// Value at q = 1 (every power of s becomes 1).
inline Rational evaluate_at_one(const QScalar& x) {
  Rational total = 0;
  for (const auto& [k, c] : x.terms()) total += c;
  return total;
}

/// Evaluate at a rational q; exact when every exponent is a multiple of 4.
inline std::optional<Rational> evaluate_rational(const QScalar& x, const Rational& q) {
  if (q <= 0) throw std::domain_error("evaluate_rational: q must be positive");
  Rational total = 0;
  for (const auto& [k, c] : x.terms()) {
    if (k % 4 != 0) return std::nullopt;
    const int e = k / 4;
    Rational p = 1;
    for (int i = 0; i < std::abs(e); ++i) p *= q;
    total += e >= 0 ? Rational(c * p) : Rational(c / p);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Canonical text: "c*s^k" terms joined by " + ", exponents ascending,
// coefficients always written as p/q. The zero scalar is "0".

inline std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

inline std::string to_string(const QScalar& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    out += format_rational(c);
    out += "*s^";
    out += std::to_string(k);
  }
  return out;
}

inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("empty integer");
    std::size_t pos = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (pos == digits.size()) throw std::invalid_argument("bad integer");
    for (std::size_t i = pos; i < digits.size(); ++i)
      if (digits[i] < '0' || digits[i] > '9')
        throw std::invalid_argument("bad integer: " + std::string(digits));
    return BigInt(std::string(digits[0] == '+' ? digits.substr(1) : digits));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// Inverse of to_string. Accepts only the canonical layout's term syntax,
/// but tolerates unsorted or repeated exponents (they are merged).
inline QScalar parse_qscalar(std::string_view text) {
  if (text == "0") return {};
  QScalar out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(" + ", start);
    std::string_view term = text.substr(start, end == std::string_view::npos ? end : end - start);
    const auto star = term.find("*s^");
    if (star == std::string_view::npos)
      throw std::invalid_argument("malformed scalar term: " + std::string(term));
    const Rational c = parse_rational(term.substr(0, star));
    const std::string exponent(term.substr(star + 3));
    std::size_t used = 0;
    const int k = std::stoi(exponent, &used);
    if (used != exponent.size())
      throw std::invalid_argument("malformed exponent: " + exponent);
    out += QScalar(c, k);
    if (end == std::string_view::npos) break;
    start = end + 3;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const QScalar& x) { return os << to_string(x); }

}  // namespace qsym
