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

/// @file serialize.hpp
/// JSON, CSV and plain-text renderings of library objects.
///
/// JSON layouts:
///   scalar     canonical string "c*s^k + ..." (exact) or a number (numeric)
///   operator   {rows, cols, entries: [{row, col, value}]}
///   state      {n, m, amplitudes: [...], norm_sq}
///   metric     {n, diagonal: [...]}
///   permutation  one-line image array; diagram {word, m_counts}
///   check      {identity_name, backend, q_values, max_residual, pass}
///   sectors    {n, q, sectors: [{two_j, casimir_eigenvalue, multiplicity, dimension_check}]}
///
/// Every JSON writer has a reader, and write(read(write(x))) reproduces
/// the first output byte for byte.

#include "qsym/decompose.hpp"
#include "qsym/dicke.hpp"
#include "qsym/metric.hpp"
#include "qsym/qscalar.hpp"
#include "qsym/report.hpp"
#include "qsym/sparse.hpp"
#include "qsym/symgroup.hpp"

#include <json.hpp>

#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace qsym {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Pretty };

inline Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "pretty") return Format::Pretty;
  throw std::invalid_argument("unknown format: " + name);
}

// ---------------------------------------------------------------------------
// scalars

inline json scalar_to_json(const QScalar& x) { return to_string(x); }
inline json scalar_to_json(double x) { return x; }

template <class S>
S scalar_from_json(const json& j) {
  if constexpr (std::is_same_v<S, QScalar>) {
    if (!j.is_string()) throw std::invalid_argument("exact scalar must be a string");
    return parse_qscalar(j.get<std::string>());
  } else {
    if (!j.is_number()) throw std::invalid_argument("numeric scalar must be a number");
    return j.get<double>();
  }
}

/// Shortest text that reads back to the same double.
inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

/// Human form of an exact scalar, e.g. "q^(1/4) - 2 q^(-1/2)".
inline std::string pretty_scalar(const QScalar& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string coeff = boost::multiprecision::denominator(mag) == 1
                            ? boost::multiprecision::numerator(mag).str()
                            : format_rational(mag);
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (mag != 1) out += coeff + " ";
    const int g = std::gcd(std::abs(k), 4);
    const int num = k / g;
    const int den = 4 / g;
    out += den == 1 ? "q^" + (num < 0 ? "(" + std::to_string(num) + ")" : std::to_string(num))
                    : "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
  return out;
}
inline std::string pretty_scalar(double x) { return format_double(x); }

inline std::string csv_scalar(const QScalar& x) { return "\"" + to_string(x) + "\""; }
inline std::string csv_scalar(double x) { return format_double(x); }

// ---------------------------------------------------------------------------
// operators

template <class S>
json to_json(const SparseOperator<S>& a) {
  json entries = json::array();
  a.for_each([&](index_t r, index_t c, const S& v) {
    entries.push_back(json{{"row", r}, {"col", c}, {"value", scalar_to_json(v)}});
  });
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

template <class S>
SparseOperator<S> operator_from_json(const json& j) {
  SparseOperator<S> a(j.at("rows").get<index_t>(), j.at("cols").get<index_t>());
  for (const auto& e : j.at("entries"))
    a.add(e.at("row").get<index_t>(), e.at("col").get<index_t>(), scalar_from_json<S>(e.at("value")));
  return a;
}

template <class S>
std::string to_csv(const SparseOperator<S>& a) {
  std::string out = "row,col,value\n";
  a.for_each([&](index_t r, index_t c, const S& v) {
    out += std::to_string(r) + "," + std::to_string(c) + "," + csv_scalar(v) + "\n";
  });
  return out;
}

/// Dense grid for small operators, triplets otherwise.
template <class S>
std::string to_pretty(const SparseOperator<S>& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols() << " operator, " << a.nonzeros() << " nonzeros\n";
  if (a.rows() > 16 || a.cols() > 16) {
    a.for_each([&](index_t r, index_t c, const S& v) { os << "  (" << r << ", " << c << ")  " << pretty_scalar(v) << "\n"; });
    return os.str();
  }
  std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols(), "0"));
  std::size_t width = 1;
  a.for_each([&](index_t r, index_t c, const S& v) {
    cells[r][c] = pretty_scalar(v);
    width = std::max(width, cells[r][c].size());
  });
  for (const auto& row : cells) {
    os << " ";
    for (const auto& cell : row) os << " " << std::setw(static_cast<int>(width)) << cell;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// states

template <class S>
json to_json(const QState<S>& s) {
  json amps = json::array();
  for (const auto& a : s.amplitudes) amps.push_back(scalar_to_json(a));
  return json{{"n", s.n_sites}, {"m", s.m}, {"amplitudes", std::move(amps)}, {"norm_sq", scalar_to_json(s.norm_sq)}};
}

template <class S>
QState<S> state_from_json(const json& j) {
  QState<S> s;
  s.n_sites = j.at("n").get<int>();
  s.m = j.at("m").get<int>();
  for (const auto& a : j.at("amplitudes")) s.amplitudes.push_back(scalar_from_json<S>(a));
  s.norm_sq = scalar_from_json<S>(j.at("norm_sq"));
  if (s.amplitudes.size() != chain_dimension(s.n_sites)) throw std::invalid_argument("state: amplitude count mismatch");
  return s;
}

template <class S>
std::string to_csv(const QState<S>& s) {
  std::string out = "index,basis,amplitude\n";
  for (index_t i = 0; i < s.amplitudes.size(); ++i)
    out += std::to_string(i) + "," + basis_label(i, s.n_sites) + "," + csv_scalar(s.amplitudes[i]) + "\n";
  out += "norm_sq,," + csv_scalar(s.norm_sq) + "\n";
  return out;
}

template <class S>
std::string to_pretty(const QState<S>& s) {
  std::ostringstream os;
  os << "|D^" << s.m << "_" << s.n_sites << ">  norm_sq = " << pretty_scalar(s.norm_sq) << "\n";
  for (index_t i = 0; i < s.amplitudes.size(); ++i)
    if (!is_zero(s.amplitudes[i])) os << "  " << basis_label(i, s.n_sites) << "  " << pretty_scalar(s.amplitudes[i]) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// metric

template <class S>
json to_json(const MetricForm<S>& m) {
  json diag = json::array();
  for (const auto& x : m.diagonal) diag.push_back(scalar_to_json(x));
  return json{{"n", m.n_sites}, {"diagonal", std::move(diag)}};
}

template <class S>
MetricForm<S> metric_from_json(const json& j) {
  MetricForm<S> m;
  m.n_sites = j.at("n").get<int>();
  for (const auto& x : j.at("diagonal")) m.diagonal.push_back(scalar_from_json<S>(x));
  return m;
}

template <class S>
std::string to_csv(const MetricForm<S>& m) {
  std::string out = "index,basis,value\n";
  for (index_t i = 0; i < m.diagonal.size(); ++i)
    out += std::to_string(i) + "," + basis_label(i, m.n_sites) + "," + csv_scalar(m.diagonal[i]) + "\n";
  return out;
}

template <class S>
std::string to_pretty(const MetricForm<S>& m) {
  std::ostringstream os;
  os << "Q = diag over " << m.diagonal.size() << " basis states\n";
  for (index_t i = 0; i < m.diagonal.size(); ++i)
    os << "  " << basis_label(i, m.n_sites) << "  " << pretty_scalar(m.diagonal[i]) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// permutations and diagrams

inline json to_json(const Permutation& p) { return p.images(); }
inline Permutation permutation_from_json(const json& j) { return Permutation(j.get<std::vector<int>>()); }

inline json to_json(const CrossingDiagram& d) { return json{{"word", d.word}, {"m_counts", d.m_counts}}; }
inline CrossingDiagram diagram_from_json(const json& j, int n) {
  const auto word = j.at("word").get<std::vector<int>>();
  auto d = crossing_counts(word, n);
  if (d.m_counts != j.at("m_counts").get<std::vector<int>>())
    throw std::invalid_argument("diagram: m_counts inconsistent with word");
  return d;
}

// ---------------------------------------------------------------------------
// reports

inline json to_json(const IdentityCheck& c) {
  json out{{"identity_name", c.identity_name},
           {"backend", c.backend},
           {"q_values", c.q_values},
           {"max_residual", c.max_residual},
           {"pass", c.pass}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

inline IdentityCheck check_from_json(const json& j) {
  IdentityCheck c;
  c.identity_name = j.at("identity_name").get<std::string>();
  c.backend = j.at("backend").get<std::string>();
  c.q_values = j.at("q_values").get<std::vector<double>>();
  c.max_residual = j.at("max_residual").get<double>();
  c.pass = j.at("pass").get<bool>();
  if (j.contains("detail")) c.detail = j.at("detail").get<std::string>();
  return c;
}

inline json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) checks.push_back(to_json(c));
  return checks;
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  for (const auto& c : j) r.add(check_from_json(c));
  return r;
}

inline std::string to_csv(const VerificationReport& r) {
  std::string out = "identity_name,backend,q_values,max_residual,pass\n";
  for (const auto& c : r.checks()) {
    std::string qs;
    for (std::size_t k = 0; k < c.q_values.size(); ++k) qs += (k ? ";" : "") + format_double(c.q_values[k]);
    out += "\"" + c.identity_name + "\"," + c.backend + "," + qs + "," + format_double(c.max_residual) + "," +
           (c.pass ? "true" : "false") + "\n";
  }
  return out;
}

inline std::string to_pretty(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks())
    os << (c.pass ? "PASS  " : "FAIL  ") << std::setw(11) << std::left << format_double(c.max_residual) << "  "
       << c.identity_name << "\n";
  os << r.checks().size() - r.failures().size() << "/" << r.checks().size() << " identities hold\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// sectors

inline json to_json(const SectorReport& s) {
  json sectors = json::array();
  for (const auto& x : s.sectors)
    sectors.push_back(json{{"two_j", x.two_j},
                           {"casimir_eigenvalue", x.casimir_eigenvalue},
                           {"multiplicity", x.multiplicity},
                           {"dimension_check", x.dimension_check}});
  return json{{"n", s.n_sites}, {"q", s.q}, {"sectors", std::move(sectors)}};
}

inline SectorReport sectors_from_json(const json& j) {
  SectorReport s;
  s.n_sites = j.at("n").get<int>();
  s.q = j.at("q").get<double>();
  for (const auto& x : j.at("sectors")) {
    Sector sec;
    sec.two_j = x.at("two_j").get<int>();
    sec.casimir_eigenvalue = x.at("casimir_eigenvalue").get<double>();
    sec.multiplicity = x.at("multiplicity").get<int>();
    sec.dimension_check = x.at("dimension_check").get<int>();
    s.sectors.push_back(sec);
  }
  return s;
}

inline std::string to_csv(const SectorReport& s) {
  std::string out = "two_j,casimir_eigenvalue,multiplicity,dimension_check\n";
  for (const auto& x : s.sectors)
    out += std::to_string(x.two_j) + "," + format_double(x.casimir_eigenvalue) + "," + std::to_string(x.multiplicity) +
           "," + std::to_string(x.dimension_check) + "\n";
  return out;
}

inline std::string spin_label(int two_j) {
  return two_j % 2 == 0 ? std::to_string(two_j / 2) : std::to_string(two_j) + "/2";
}

inline std::string to_pretty(const SectorReport& s) {
  std::ostringstream os;
  os << "N = " << s.n_sites << ", q = " << format_double(s.q) << "\n";
  os << "  j      mult  [j]_q[j+1]_q\n";
  for (const auto& x : s.sectors)
    os << "  " << std::setw(5) << std::left << spin_label(x.two_j) << "  " << std::setw(4) << x.multiplicity << "  "
       << format_double(x.casimir_eigenvalue) << "\n";
  os << "  total dimension " << s.total_dimension() << "\n";
  return os.str();
}

}  // namespace qsym
