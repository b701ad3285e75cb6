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

/// @file algebra.hpp
/// Spin-j representations of U_q(su(2)) on a single site.
///
/// Basis vectors are ordered by descending J³: index a carries
/// j₃ = j − a. The raising operator acts as
///
///   J⁺ |j, j₃⟩ = sqrt([j − j₃]_q [j + j₃ + 1]_q) |j, j₃ + 1⟩,
///
/// and K± = q^(±J³/2) are diagonal. For j = 1/2 every entry is 0, 1 or a
/// power of q^(1/4), so the exact backend is accepted only there.

#include "qsym/backend.hpp"
#include "qsym/report.hpp"
#include "qsym/sparse.hpp"

#include <stdexcept>
#include <string>

namespace qsym {

struct IrrepLabel {
  int two_j = 1;

  [[nodiscard]] int dimension() const noexcept { return two_j + 1; }
  /// 2·j₃ of basis index a.
  [[nodiscard]] int two_m(int a) const noexcept { return two_j - 2 * a; }
  friend bool operator==(IrrepLabel, IrrepLabel) = default;
};

inline constexpr IrrepLabel kFundamental{1};

enum class Generator { Raise, Lower, Weight };

inline const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Raise: return "Jplus";
    case Generator::Lower: return "Jminus";
    case Generator::Weight: return "J3";
  }
  return "?";
}

template <class S>
struct SiteGenerators {
  SparseOperator<S> jplus;
  SparseOperator<S> jminus;
  SparseOperator<S> j3;
  SparseOperator<S> kplus;   ///< q^(J³/2)
  SparseOperator<S> kminus;  ///< q^(-J³/2)
};

namespace detail {

inline void check_irrep(IrrepLabel j) {
  if (j.two_j < 0) throw std::invalid_argument("irrep label must have two_j >= 0");
}

template <Backend B>
void require_ring_irrep(IrrepLabel j, const B&) {
  check_irrep(j);
  if constexpr (B::is_exact) {
    if (j.two_j != 1)
      throw std::domain_error("exact backend supports only the fundamental irrep (two_j = 1); got two_j = " +
                              std::to_string(j.two_j));
  }
}

/// Diagonal operator with entries f(2·j₃) over the irrep basis.
template <Backend B, class F>
SparseOperator<scalar_t<B>> diagonal_in_weight(IrrepLabel j, F&& f) {
  const auto dim = static_cast<index_t>(j.dimension());
  SparseOperator<scalar_t<B>> out(dim);
  for (int a = 0; a < j.dimension(); ++a) out.set(static_cast<index_t>(a), static_cast<index_t>(a), f(j.two_m(a)));
  return out;
}

}  // namespace detail

template <Backend B>
SiteGenerators<scalar_t<B>> generators(IrrepLabel j, const B& backend) {
  detail::require_ring_irrep(j, backend);
  using S = scalar_t<B>;
  const auto dim = static_cast<index_t>(j.dimension());
  SiteGenerators<S> g{SparseOperator<S>(dim), SparseOperator<S>(dim), {}, {}, {}};
  // column a has j₃ = j - a; J⁺ maps it to index a-1 with j - j₃ = a and j + j₃ + 1 = two_j - a + 1.
  for (int a = 1; a < j.dimension(); ++a) {
    const S amp = backend.sqrt(backend.q_number(a) * backend.q_number(j.two_j - a + 1));
    g.jplus.set(static_cast<index_t>(a - 1), static_cast<index_t>(a), amp);
    g.jminus.set(static_cast<index_t>(a), static_cast<index_t>(a - 1), amp);
  }
  g.j3 = detail::diagonal_in_weight<B>(j, [&](int two_m) { return backend.from_ratio(two_m, 2); });
  g.kplus = detail::diagonal_in_weight<B>(j, [&](int two_m) { return backend.q_quarter_power(two_m); });
  g.kminus = detail::diagonal_in_weight<B>(j, [&](int two_m) { return backend.q_quarter_power(-two_m); });
  return g;
}

/// Which of the two equal forms of the deformed Casimir to assemble.
enum class CasimirOrdering {
  LowerRaise,  ///< J⁻J⁺ + [J³]_q [J³ + 1]_q
  RaiseLower,  ///< J⁺J⁻ + [J³]_q [J³ − 1]_q
};

template <Backend B>
SparseOperator<scalar_t<B>> casimir(IrrepLabel j, const B& backend,
                                    CasimirOrdering ordering = CasimirOrdering::LowerRaise) {
  const auto g = generators(j, backend);
  const int shift = ordering == CasimirOrdering::LowerRaise ? 2 : -2;
  auto weight = detail::diagonal_in_weight<B>(
      j, [&](int two_m) { return backend.q_number_half(two_m) * backend.q_number_half(two_m + shift); });
  return (ordering == CasimirOrdering::LowerRaise ? g.jminus * g.jplus : g.jplus * g.jminus) + weight;
}

/// [j]_q [j+1]_q
template <Backend B>
scalar_t<B> casimir_eigenvalue(IrrepLabel j, const B& backend) {
  return backend.q_number_half(j.two_j) * backend.q_number_half(j.two_j + 2);
}

/// α [two_x/2]_q = q^(two_x/4) − q^(-two_x/4) with α = q^(1/2) − q^(-1/2).
///
/// Unlike [two_x/2]_q itself this is a Laurent polynomial in q^(1/4) for
/// every integer two_x, so α²-scaled Casimirs stay exact at half-integer spin.
template <Backend B>
scalar_t<B> alpha_q_number_half(int two_x, const B& backend) {
  return backend.q_quarter_power(two_x) - backend.q_quarter_power(-two_x);
}

/// α² C_q, in the ring for every irrep the backend accepts.
template <Backend B>
SparseOperator<scalar_t<B>> scaled_casimir(IrrepLabel j, const B& backend,
                                           CasimirOrdering ordering = CasimirOrdering::LowerRaise) {
  const auto g = generators(j, backend);
  const int shift = ordering == CasimirOrdering::LowerRaise ? 2 : -2;
  const auto alpha = alpha_q_number_half(2, backend);
  auto weight = detail::diagonal_in_weight<B>(j, [&](int two_m) {
    return alpha_q_number_half(two_m, backend) * alpha_q_number_half(two_m + shift, backend);
  });
  auto ladder = ordering == CasimirOrdering::LowerRaise ? g.jminus * g.jplus : g.jplus * g.jminus;
  return ladder * (alpha * alpha) + weight;
}

/// α² [j]_q [j+1]_q
template <Backend B>
scalar_t<B> scaled_casimir_eigenvalue(IrrepLabel j, const B& backend) {
  return alpha_q_number_half(j.two_j, backend) * alpha_q_number_half(j.two_j + 2, backend);
}

/// Defining relations, Casimir centrality and the *-structure of one irrep.
template <Backend B>
VerificationReport verify_site_relations(IrrepLabel j, const B& backend) {
  using S = scalar_t<B>;
  VerificationReport report;
  const std::string tag = "site[two_j=" + std::to_string(j.two_j) + "] ";
  const auto g = generators(j, backend);

  report.record(backend, tag + "[J3,J+] = J+", residual(commutator(g.j3, g.jplus), g.jplus));
  report.record(backend, tag + "[J3,J-] = -J-", residual(commutator(g.j3, g.jminus), g.jminus * backend.from_int(-1)));
  const auto two_j3_qnumber = detail::diagonal_in_weight<B>(j, [&](int two_m) { return backend.q_number(two_m); });
  report.record(backend, tag + "[J+,J-] = [2 J3]_q", residual(commutator(g.jplus, g.jminus), two_j3_qnumber));
  report.record(backend, tag + "J- = (J+)^T", residual(g.jminus, g.jplus.transpose()));
  report.record(backend, tag + "J3 self-adjoint", residual(g.j3, g.j3.transpose()));
  report.record(backend, tag + "K+ K- = 1",
                residual(g.kplus * g.kminus, SparseOperator<S>::identity(g.j3.rows(), backend.one())));

  // Casimir entries need [j₃]_q at half-integer j₃ unless j is an integer.
  const bool casimir_in_ring = !B::is_exact || j.two_j % 2 == 0;
  if (casimir_in_ring) {
    const auto c1 = casimir(j, backend, CasimirOrdering::LowerRaise);
    const auto c2 = casimir(j, backend, CasimirOrdering::RaiseLower);
    const auto expected =
        SparseOperator<S>::identity(g.j3.rows(), backend.one()) * casimir_eigenvalue(j, backend);
    report.record(backend, tag + "Casimir orderings agree", residual(c1, c2));
    report.record(backend, tag + "Casimir = [j]_q[j+1]_q 1", residual(c1, expected));
    double central = 0.0;
    for (const auto* x : {&g.jplus, &g.jminus, &g.j3})
      central = std::max(central, residual(commutator(c1, *x), SparseOperator<S>(g.j3.rows())));
    report.record(backend, tag + "Casimir central", central);
  } else {
    // Exact half-integer spin: compare α² C_q, which never leaves the ring.
    const auto c1 = scaled_casimir(j, backend, CasimirOrdering::LowerRaise);
    const auto c2 = scaled_casimir(j, backend, CasimirOrdering::RaiseLower);
    const auto expected =
        SparseOperator<S>::identity(g.j3.rows(), backend.one()) * scaled_casimir_eigenvalue(j, backend);
    report.record(backend, tag + "alpha^2 Casimir orderings agree", residual(c1, c2));
    report.record(backend, tag + "alpha^2 Casimir = alpha^2 [j]_q[j+1]_q 1", residual(c1, expected));
    double central = 0.0;
    for (const auto* x : {&g.jplus, &g.jminus, &g.j3})
      central = std::max(central, residual(commutator(c1, *x), SparseOperator<S>(g.j3.rows())));
    report.record(backend, tag + "alpha^2 Casimir central", central);
  }
  return report;
}

}  // namespace qsym
