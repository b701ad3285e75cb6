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

/// @file suites.hpp
/// Identity suites, one per module, as run by `qsym verify` and by the
/// acceptance tests.
///
/// Every suite takes a backend and a chain length. Exact suites record
/// residuals that must be identically zero; numeric suites compare against
/// the backend tolerance. Checks whose cost grows with N! (exhaustive
/// S_N enumeration, the projector) run at a capped size, and the cap is
/// part of the identity name.

#include "qsym/algebra.hpp"
#include "qsym/backend.hpp"
#include "qsym/coproduct.hpp"
#include "qsym/decompose.hpp"
#include "qsym/dense.hpp"
#include "qsym/dicke.hpp"
#include "qsym/hecke.hpp"
#include "qsym/metric.hpp"
#include "qsym/report.hpp"
#include "qsym/sparse.hpp"
#include "qsym/symgroup.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

struct SuiteOptions {
  std::uint64_t seed = 20240607;
  int exhaustive_max_sites = 5;       ///< enumerate all of S_N up to this N
  int random_permutations = 48;       ///< sampled permutations beyond it
  int projector_max_exact = 4;
  int projector_max_numeric = 7;
  int commutant_max_sites = 5;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"site", "coproduct", "dicke", "symgroup", "hecke", "metric", "all"};
  return names;
}

namespace detail {

inline std::string sized(const std::string& name, int n) { return "N=" + std::to_string(n) + " " + name; }

template <class S>
SparseOperator<S> zero_like(const SparseOperator<S>& a) {
  return SparseOperator<S>(a.rows(), a.cols());
}

/// Build an operator at q and at 1/q. For exact scalars the substitution
/// is applied to the finished object; numerically the construction is
/// repeated with the inverted backend.
template <class F>
auto at_inverse_q(const ExactBackend& backend, F&& build) {
  return build(backend).transform([](const QScalar& x) { return invert_q(x); });
}
template <class F>
auto at_inverse_q(const NumericBackend& backend, F&& build) {
  return build(backend.inverted());
}

inline std::vector<QScalar> invert_q(const std::vector<QScalar>& v) {
  std::vector<QScalar> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(qsym::invert_q(x));
  return out;
}

template <Backend B>
QState<scalar_t<B>> q_dicke_inverse_q(int n, int m, const B& backend) {
  if constexpr (B::is_exact) {
    auto d = q_dicke(n, m, backend);
    d.amplitudes = detail::invert_q(d.amplitudes);
    d.norm_sq = qsym::invert_q(d.norm_sq);
    return d;
  } else {
    return q_dicke(n, m, backend.inverted());
  }
}

/// Permutations to test: all of S_N when small, otherwise a seeded sample.
inline std::vector<Permutation> test_permutations(int n, const SuiteOptions& opts) {
  if (n <= opts.exhaustive_max_sites) return all_permutations(n);
  std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(n));
  std::vector<Permutation> out{Permutation::identity(n), Permutation::reversal(n)};
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int k = 0; k < opts.random_permutations; ++k) {
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    out.emplace_back(img);
  }
  return out;
}

/// A seeded random scalar: a small rational for the exact backend, a
/// value in [-1, 1] numerically.
template <Backend B>
scalar_t<B> random_scalar(std::mt19937_64& rng, const B& backend) {
  if constexpr (B::is_exact) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return backend.from_ratio(num(rng), den(rng));
  } else {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return u(rng);
  }
}

template <Backend B>
std::vector<scalar_t<B>> random_vector(std::size_t dim, std::mt19937_64& rng, const B& backend) {
  std::vector<scalar_t<B>> v(dim);
  for (auto& x : v) x = random_scalar(rng, backend);
  return v;
}

/// ⊗ₖ ψₖ with site 1 as the most significant factor.
template <class S>
std::vector<S> product_state(const std::vector<std::array<S, 2>>& sites) {
  std::vector<S> out{S(1)};
  for (const auto& psi : sites) {
    std::vector<S> next;
    next.reserve(out.size() * 2);
    for (const auto& a : out) {
      next.push_back(a * psi[0]);
      next.push_back(a * psi[1]);
    }
    out = std::move(next);
  }
  return out;
}

template <class S>
std::vector<S> scale(std::vector<S> v, const S& k) {
  for (auto& x : v) x = x * k;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// site

template <Backend B>
VerificationReport site_suite(const B& backend) {
  VerificationReport report = verify_site_relations(kFundamental, backend);
  if constexpr (!B::is_exact) {
    for (int two_j : {2, 3, 4}) report.merge(verify_site_relations(IrrepLabel{two_j}, backend));
    // At q = 1 the generators are the classical spin-j matrices.
    const NumericBackend classical(1.0);
    double worst = 0.0;
    for (int two_j : {1, 2, 3, 4}) {
      const IrrepLabel j{two_j};
      const auto g = generators(j, classical);
      SparseOperator<double> expected(static_cast<index_t>(j.dimension()));
      for (int a = 1; a < j.dimension(); ++a)
        expected.set(static_cast<index_t>(a - 1), static_cast<index_t>(a),
                     std::sqrt(static_cast<double>(a) * (two_j - a + 1)));
      worst = std::max(worst, residual(g.jplus, expected));
    }
    report.record(classical, "site q=1 generators equal classical spin-j matrices", worst);
  }
  return report;
}

// ---------------------------------------------------------------------------
// coproduct

template <Backend B>
VerificationReport coproduct_suite(int n, const B& backend, const SuiteOptions& opts = {}) {
  using S = scalar_t<B>;
  using detail::sized;
  VerificationReport report;
  const auto dk = CoproductKind::Deformed;
  const auto jp = delta_n(Generator::Raise, n, dk, backend);
  const auto jm = delta_n(Generator::Lower, n, dk, backend);
  const auto j3 = delta_n(Generator::Weight, n, dk, backend);
  const index_t dim = chain_dimension(n);

  std::vector<S> two_j3_q(dim);
  for (index_t i = 0; i < dim; ++i) two_j3_q[i] = backend.q_number(chain_two_m(i, n));
  report.record(backend, sized("coproduct [J+,J-] = [2 J3]_q", n),
                residual(commutator(jp.matrix, jm.matrix), SparseOperator<S>::diagonal(two_j3_q)));
  report.record(backend, sized("coproduct [J3,J+] = J+", n), residual(commutator(j3.matrix, jp.matrix), jp.matrix));
  report.record(backend, sized("coproduct [J3,J-] = -J-", n),
                residual(commutator(j3.matrix, jm.matrix), jm.matrix * backend.from_int(-1)));

  // Word form and direct assembly are independent constructions.
  double words = 0.0;
  for (const auto* op : {&jp, &jm, &j3}) words = std::max(words, residual(assemble_words(op->words, n, backend), op->matrix));
  report.record(backend, sized("coproduct tensor words assemble to the direct matrix", n), words);

  if (n >= 2) {
    double coassoc = 0.0;
    for (auto g : {Generator::Raise, Generator::Lower, Generator::Weight}) {
      const auto lower = delta_n(g, n - 1, dk, backend);
      const auto target = delta_matrix(g, n, dk, backend);
      for (int site = 1; site <= n - 1; ++site)
        coassoc = std::max(coassoc, residual(delta_insert(lower, site, backend).matrix, target));
      const auto plain = delta_n(g, n - 1, CoproductKind::Undeformed, backend);
      const auto plain_target = delta_matrix(g, n, CoproductKind::Undeformed, backend);
      for (int site = 1; site <= n - 1; ++site)
        coassoc = std::max(coassoc, residual(delta_insert(plain, site, backend).matrix, plain_target));
    }
    report.record(backend, sized("coassociativity: delta_insert at every site of Delta^(N-1) = Delta^(N)", n), coassoc);
  }

  // Exactly, odd N needs the α²-scaled Casimir; numerically q = 1 makes α vanish.
  const auto casimir_op = B::is_exact ? scaled_chain_casimir(n, backend) : chain_casimir(n, backend);
  double central = 0.0;
  for (const auto* x : {&jp, &jm, &j3})
    central = std::max(central, residual(commutator(casimir_op, x->matrix), detail::zero_like(casimir_op)));
  report.record(backend, sized("chain Casimir commutes with Delta(J+), Delta(J-), Delta(J3)", n), central);

  const auto ground = ground_state(n, backend);
  const S top = B::is_exact ? scaled_casimir_eigenvalue(IrrepLabel{n}, backend)
                            : casimir_eigenvalue(IrrepLabel{n}, backend);
  report.record(backend, sized("chain Casimir |G> = [N/2]_q[N/2+1]_q |G>", n),
                residual(casimir_op.apply(ground.amplitudes), detail::scale(ground.amplitudes, top)));

  // Classical commutant: [W(σ), Δ(g)] = 0 for the undeformed coproduct.
  const int nc = std::min(n, opts.commutant_max_sites);
  double commutant = 0.0;
  std::vector<SparseOperator<S>> plain;
  for (auto g : {Generator::Raise, Generator::Lower, Generator::Weight})
    plain.push_back(delta_matrix(g, nc, CoproductKind::Undeformed, backend));
  for (const auto& sigma : all_permutations(nc)) {
    const auto w = perm_rep(sigma, backend);
    for (const auto& x : plain) commutant = std::max(commutant, residual(commutator(w, x), detail::zero_like(x)));
  }
  report.record(backend, sized("undeformed Delta(g) commutes with W(sigma) for all sigma", nc), commutant);
  return report;
}

// ---------------------------------------------------------------------------
// dicke

template <Backend B>
VerificationReport dicke_suite(int n, const B& backend) {
  using S = scalar_t<B>;
  using detail::sized;
  VerificationReport report;
  const auto basis = q_symmetric_basis(n, backend);
  const auto jp = delta_matrix(Generator::Raise, n, CoproductKind::Deformed, backend);
  const auto jm = delta_matrix(Generator::Lower, n, CoproductKind::Deformed, backend);
  const auto j3 = delta_matrix(Generator::Weight, n, CoproductKind::Deformed, backend);
  const auto casimir_op = B::is_exact ? scaled_chain_casimir(n, backend) : chain_casimir(n, backend);
  const S top = B::is_exact ? scaled_casimir_eigenvalue(IrrepLabel{n}, backend)
                            : casimir_eigenvalue(IrrepLabel{n}, backend);

  double ortho = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const S expected = a == b ? basis[a].norm_sq : backend.zero();
      ortho = std::max(ortho, magnitude(dot(basis[a].amplitudes, basis[b].amplitudes) - expected) /
                                  std::max(1.0, magnitude(expected)));
    }
  report.record(backend, sized("q-Dicke states orthonormal (standard product, norm_sq in ring)", n), ortho);

  if constexpr (B::is_exact) {
    double qbin = 0.0;
    for (const auto& d : basis) qbin = std::max(qbin, magnitude(d.norm_sq - q_binomial(n, d.m)));
    report.record(backend, sized("q-Dicke norm_sq = q-binomial", n), qbin);
  }

  const std::vector<S> zero(chain_dimension(n), backend.zero());
  report.record(backend, sized("Delta(J+) |D^N_N> = 0", n), residual(jp.apply(basis.back().amplitudes), zero));
  report.record(backend, sized("Delta(J-) |G> = 0", n), residual(jm.apply(basis.front().amplitudes), zero));

  double eig = 0.0;
  double weight = 0.0;
  double ladder = 0.0;
  for (const auto& d : basis) {
    eig = std::max(eig, residual(casimir_op.apply(d.amplitudes), detail::scale(d.amplitudes, top)));
    weight = std::max(weight, residual(j3.apply(d.amplitudes),
                                       detail::scale(d.amplitudes, backend.from_ratio(2 * d.m - n, 2))));
    if (d.m < n) {
      // Δ(J⁺)|D^m⟩ ∝ |D^(m+1)⟩; in the exact normalization the factor is [m+1]_q.
      const auto& next = basis[static_cast<std::size_t>(d.m + 1)];
      if constexpr (B::is_exact) {
        ladder = std::max(ladder, residual(jp.apply(d.amplitudes), detail::scale(next.amplitudes, backend.q_number(d.m + 1))));
      } else {
        const double factor = std::sqrt(backend.q_number(d.m + 1) * backend.q_number(n - d.m));
        ladder = std::max(ladder, residual(jp.apply(d.amplitudes), detail::scale(next.amplitudes, factor)));
      }
    }
  }
  report.record(backend, sized("chain Casimir eigenvector: C |D^m> = [N/2]_q[N/2+1]_q |D^m>", n), eig);
  report.record(backend, sized("Delta(J3) |D^m> = (m - N/2) |D^m>", n), weight);
  report.record(backend, sized("Delta(J+) maps |D^m> onto the |D^(m+1)> ray", n), ladder);

  const auto w_tau = perm_rep(Permutation::reversal(n), backend);
  double reversal = 0.0;
  for (const auto& d : basis) {
    const auto flipped = detail::q_dicke_inverse_q(n, d.m, backend);
    reversal = std::max(reversal, residual(w_tau.apply(d.amplitudes), flipped.amplitudes));
    reversal = std::max(reversal, magnitude(d.norm_sq - flipped.norm_sq));
  }
  report.record(backend, sized("W(tau) |D^m>_q = |D^m>_(1/q)", n), reversal);
  return report;
}

// ---------------------------------------------------------------------------
// symgroup

template <Backend B>
VerificationReport symgroup_suite(int n, const B& backend, const SuiteOptions& opts = {}) {
  using S = scalar_t<B>;
  using detail::sized;
  VerificationReport report;
  const index_t dim = chain_dimension(n);
  const auto id = SparseOperator<S>::identity(dim, backend.one());
  std::vector<SparseOperator<S>> wq;
  for (int i = 1; i < n; ++i) wq.push_back(q_transposition(i, n, backend));

  double invol = 0.0;
  double braid = 0.0;
  double distant = 0.0;
  double adjoint = 0.0;
  for (int i = 1; i < n; ++i) {
    const auto& a = wq[static_cast<std::size_t>(i - 1)];
    invol = std::max(invol, residual(a * a, id));
    if (i + 1 < n) {
      const auto& b = wq[static_cast<std::size_t>(i)];
      braid = std::max(braid, residual(a * b * a, b * a * b));
    }
    for (int k = i + 2; k < n; ++k) {
      const auto& b = wq[static_cast<std::size_t>(k - 1)];
      distant = std::max(distant, residual(a * b, b * a));
    }
    const auto inv = detail::at_inverse_q(backend, [&](const auto& bk) { return q_transposition(i, n, bk); });
    adjoint = std::max(adjoint, residual(a.transpose(), inv));
  }
  if (n >= 2) {
    report.record(backend, sized("(W^q_i)^2 = 1", n), invol);
    report.record(backend, sized("(W^q_i)^T = W^(1/q)_i", n), adjoint);
  }
  if (n >= 3) report.record(backend, sized("braid W^q_i W^q_i+1 W^q_i = W^q_i+1 W^q_i W^q_i+1", n), braid);
  if (n >= 4) report.record(backend, sized("distant q-transpositions commute", n), distant);

  const auto perms = detail::test_permutations(n, opts);
  const std::string scope = n <= opts.exhaustive_max_sites ? "all sigma" : "sampled sigma";
  const auto ctau = c_tau(n, backend);
  const auto ctau_inv = to_operator(metric_matrix(n, backend));
  double words = 0.0;
  double closed = 0.0;
  double perm_adjoint = 0.0;
  double conj = 0.0;
  double rep = 0.0;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const auto& sigma = perms[k];
    const auto w1 = reduced_word(sigma, WordStrategy::BubbleDescent);
    const auto w2 = reduced_word(sigma, WordStrategy::RightmostDescent);
    const auto a = q_perm_rep_from_word(w1, n, backend);
    words = std::max(words, residual(a, q_perm_rep_from_word(w2, n, backend)));
    const auto wq_sigma = q_perm_rep(sigma, backend);
    closed = std::max(closed, residual(a, wq_sigma));
    const auto wq_inv = q_perm_rep(sigma.inverse(), backend);
    const auto inv_q = detail::at_inverse_q(backend, [&](const auto& bk) { return q_perm_rep(sigma.inverse(), bk); });
    perm_adjoint = std::max(perm_adjoint, residual(wq_sigma.transpose(), inv_q));
    conj = std::max(conj, residual(ctau * wq_sigma.transpose() * ctau_inv, wq_inv));
    const auto& rho = perms[(k * 7 + 3) % perms.size()];
    rep = std::max(rep, residual(perm_rep(sigma, backend) * perm_rep(rho, backend), perm_rep(sigma * rho, backend)));
    rep = std::max(rep, residual(wq_sigma * q_perm_rep(rho, backend), q_perm_rep(sigma * rho, backend)));
  }
  report.record(backend, sized("W^q(sigma) independent of reduced word, " + scope, n), words);
  report.record(backend, sized("W^q(sigma) = C(sigma) W(sigma) from crossing counts, " + scope, n), closed);
  report.record(backend, sized("W(sigma rho) = W(sigma) W(rho) and W^q likewise, " + scope, n), rep);
  report.record(backend, sized("(W^q(sigma))^T = W^(1/q)(sigma^-1), " + scope, n), perm_adjoint);
  report.record(backend, sized("C(tau) W^q(sigma)^T C(tau)^-1 = W^q(sigma^-1), " + scope, n), conj);

  double invariant = 0.0;
  for (const auto& d : q_symmetric_basis(n, backend))
    for (const auto& a : wq) invariant = std::max(invariant, residual(a.apply(d.amplitudes), d.amplitudes));
  report.record(backend, sized("W^q_i |D^m>_q = |D^m>_q for all i, m", n), invariant);

  // Product states: W^q(σ) ⊗ψₖ puts q^(J³Mᵢ/2) ψ_σ⁻¹(i) on site i.
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  double law = 0.0;
  for (std::size_t k = 0; k < std::min<std::size_t>(perms.size(), 24); ++k) {
    const auto& sigma = perms[(k * 5 + 1) % perms.size()];
    std::vector<std::array<S, 2>> sites(static_cast<std::size_t>(n));
    for (auto& psi : sites) psi = {detail::random_scalar(rng, backend), detail::random_scalar(rng, backend)};
    const auto diagram = crossing_counts(reduced_word(sigma), n);
    const auto inv = sigma.inverse();
    std::vector<std::array<S, 2>> moved(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const auto& psi = sites[static_cast<std::size_t>(inv(i) - 1)];
      const int mcount = diagram.m_counts[static_cast<std::size_t>(i - 1)];
      moved[static_cast<std::size_t>(i - 1)] = {psi[0] * backend.q_quarter_power(mcount),
                                                psi[1] * backend.q_quarter_power(-mcount)};
    }
    const auto lhs = q_perm_rep_from_word(diagram.word, n, backend).apply(detail::product_state(sites));
    law = std::max(law, residual(lhs, detail::product_state(moved)));
  }
  report.record(backend, sized("product-state law W^q(sigma) = (x) q^(J3 M_i/2) W(sigma)", n), law);
  return report;
}

// ---------------------------------------------------------------------------
// hecke

template <Backend B>
VerificationReport hecke_suite(int n, const B& backend) {
  using S = scalar_t<B>;
  using detail::sized;
  VerificationReport report;
  const index_t dim = chain_dimension(n);
  const auto id = SparseOperator<S>::identity(dim, backend.one());
  const S alpha = hecke_alpha(backend);
  std::vector<SparseOperator<S>> a;
  for (int i = 1; i < n; ++i) a.push_back(hecke_generator(i, n, backend));

  std::vector<SparseOperator<S>> delta;
  for (auto g : {Generator::Raise, Generator::Lower, Generator::Weight})
    delta.push_back(delta_matrix(g, n, CoproductKind::Deformed, backend));
  const auto basis = q_symmetric_basis(n, backend);

  double hecke = 0.0;
  double braid = 0.0;
  double distant = 0.0;
  double commutant = 0.0;
  double trivial = 0.0;
  double intertwine = 0.0;
  for (int i = 1; i < n; ++i) {
    const auto& ai = a[static_cast<std::size_t>(i - 1)];
    hecke = std::max(hecke, residual(ai * ai, ai * alpha + id));
    if (i + 1 < n) {
      const auto& b = a[static_cast<std::size_t>(i)];
      braid = std::max(braid, residual(ai * b * ai, b * ai * b));
    }
    for (int k = i + 2; k < n; ++k) {
      const auto& b = a[static_cast<std::size_t>(k - 1)];
      distant = std::max(distant, residual(ai * b, b * ai));
    }
    const auto wi = perm_rep(Permutation::transposition(i, n), backend);
    const auto ri = r_matrix_site(i, n, backend);
    for (const auto& h : delta) {
      commutant = std::max(commutant, residual(commutator(ai, h), detail::zero_like(h)));
      // W_i Δ(h) W_i R_i = R_i Δ(h), i.e. W_i Δ(h) W_i = R_i Δ(h) R_i⁻¹.
      intertwine = std::max(intertwine, residual(wi * h * wi * ri, ri * h));
    }
    for (const auto& d : basis)
      trivial = std::max(trivial, residual(ai.apply(d.amplitudes), detail::scale(d.amplitudes, backend.q_quarter_power(2))));
  }
  if (n >= 2) {
    report.record(backend, sized("Hecke relation A_i^2 = alpha A_i + 1", n), hecke);
    report.record(backend, sized("[A_i, Delta(h)] = 0 for h in {J+, J-, J3}", n), commutant);
    report.record(backend, sized("W_i Delta(h) W_i = R_i Delta(h) R_i^-1", n), intertwine);
    report.record(backend, sized("A_i |D^m>_q = q^(1/2) |D^m>_q", n), trivial);
  }
  if (n >= 3) report.record(backend, sized("Hecke braid A_i A_i+1 A_i = A_i+1 A_i A_i+1", n), braid);
  if (n >= 4) report.record(backend, sized("distant Hecke generators commute", n), distant);

  report.merge(verify_yang_baxter(backend));

  // Two fundamental sites: the characteristic polynomial of q^(1/4) W R.
  const auto a2 = hecke_generator(1, 2, backend);
  const auto id4 = SparseOperator<S>::identity(4, backend.one());
  report.record(backend, "(q^(1/4)WR - q^(1/2))(q^(1/4)WR + q^(-1/2)) = 0 on two sites",
                residual((a2 - id4 * backend.q_quarter_power(2)) * (a2 + id4 * backend.q_quarter_power(-2)),
                         detail::zero_like(a2)));
  if constexpr (B::is_exact) {
    report.record(backend, "R = q^(1/4) 1 on |up up> and |down down>",
                  std::max(magnitude(r_matrix_fundamental(backend).at(0, 0) - backend.q_quarter_power(1)),
                           magnitude(r_matrix_fundamental(backend).at(3, 3) - backend.q_quarter_power(1))));
  } else {
    const auto wr = perm_rep(Permutation::transposition(1, 2), backend) * r_matrix_fundamental(backend);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(wr), false);
    std::vector<double> got;
    double imag = 0.0;
    for (Eigen::Index k = 0; k < 4; ++k) {
      got.push_back(solver.eigenvalues()(k).real());
      imag = std::max(imag, std::abs(solver.eigenvalues()(k).imag()));
    }
    std::sort(got.begin(), got.end());
    const double up = backend.q_quarter_power(1);
    const double down = -backend.q_quarter_power(-3);
    std::vector<double> want{down, up, up, up};
    double deviation = imag;
    for (std::size_t k = 0; k < 4; ++k) deviation = std::max(deviation, std::abs(got[k] - want[k]));
    report.record(backend, "WR eigenvalues on two sites = {q^(1/4) x3, -q^(-3/4) x1}", deviation);
  }
  return report;
}

// ---------------------------------------------------------------------------
// metric

template <Backend B>
VerificationReport metric_suite(int n, const B& backend, const SuiteOptions& opts = {}) {
  using S = scalar_t<B>;
  using detail::sized;
  VerificationReport report;

  const auto metric = metric_matrix(n, backend);
  const auto q_op = to_operator(metric);
  const index_t dim = chain_dimension(n);
  report.record(backend, sized("Q = C(tau)^-1", n),
                residual(q_op * c_tau(n, backend), SparseOperator<S>::identity(dim, backend.one())));

  // Local product form: ⊗ᵢ q^(½(N+1−2i)J³) assembled by Kronecker products.
  SparseOperator<S> local = SparseOperator<S>::identity(1, backend.one());
  for (int i = 1; i <= n; ++i) {
    SparseOperator<S> site(2);
    site.set(0, 0, backend.q_quarter_power(n + 1 - 2 * i));
    site.set(1, 1, backend.q_quarter_power(-(n + 1 - 2 * i)));
    local = kron(local, site);
  }
  report.record(backend, sized("Q factorizes as a tensor product of site factors", n), residual(q_op, local));

  bool positive = true;
  for (double q : {0.1, 0.5, 2.0, 10.0}) {
    for (const auto& x : metric_matrix(n, NumericBackend(q)).diagonal) positive = positive && x > 0.0;
    if constexpr (B::is_exact)
      for (const auto& x : metric.diagonal) positive = positive && evaluate(x, q) > 0.0;
  }
  if constexpr (!B::is_exact)
    for (const auto& x : metric.diagonal) positive = positive && x > 0.0;
  report.record_bool(backend, sized("Q diagonal strictly positive at q in {1/10, 1/2, 2, 10}", n), positive);

  // *-unitarity of the q-representation and the adjoint identity.
  const int nu = std::min(n, 4);
  double unitary = 0.0;
  for (const auto& sigma : all_permutations(nu))
    unitary = std::max(unitary, residual(star_adjoint(q_perm_rep(sigma, backend), nu, backend),
                                         q_perm_rep(sigma.inverse(), backend)));
  report.record(backend, sized("star_adjoint(W^q(sigma)) = W^q(sigma^-1) for all sigma", nu), unitary);

  if (n >= 2) {
    double self = 0.0;
    for (int i = 1; i < n; ++i) {
      const auto w = q_transposition(i, n, backend);
      self = std::max(self, residual(star_adjoint(w, n, backend), w));
    }
    report.record(backend, sized("star_adjoint(W^q_i) = W^q_i", n), self);

    std::mt19937_64 rng(opts.seed + 17);
    const auto w = q_transposition(1, n, backend);
    const auto w_star = star_adjoint(w, n, backend);
    const auto psi = detail::random_vector(dim, rng, backend);
    const auto phi = detail::random_vector(dim, rng, backend);
    const S lhs = q_inner(psi, w.apply(phi), metric);
    const S rhs = q_inner(w_star.apply(psi), phi, metric);
    report.record(backend, sized("Q(psi, A phi) = Q(A* psi, phi) for A = W^q_1", n),
                  magnitude(lhs - rhs) / std::max({1.0, magnitude(lhs), magnitude(rhs)}));
  }

  // Projector checks run at a capped size.
  const int np = std::min(n, B::is_exact ? opts.projector_max_exact : opts.projector_max_numeric);
  const index_t pdim = chain_dimension(np);
  const auto pi = projector(np, backend);
  const auto pmetric = metric_matrix(np, backend);
  report.record(backend, sized("pi_q^2 = pi_q", np), residual(pi * pi, pi));
  report.record(backend, sized("star_adjoint(pi_q) = pi_q", np), residual(star_adjoint(pi, np, backend), pi));
  const auto pi_inv = detail::at_inverse_q(backend, [&](const auto& bk) { return projector(np, bk); });
  report.record(backend, sized("(pi_q)^T = pi_(1/q)", np), residual(pi.transpose(), pi_inv));
  report.record(backend, sized("trace pi_q = N + 1", np), magnitude(trace(pi) - backend.from_int(np + 1)));

  const auto ik = image_kernel_capped(pi, np, backend);
  double fixes = 0.0;
  for (const auto& d : ik.image_basis) fixes = std::max(fixes, residual(pi.apply(d.amplitudes), d.amplitudes));
  report.record(backend, sized("pi_q |D^m>_q = |D^m>_q for all m", np), fixes);
  if (ik.kernel_available) {
    report.record_bool(backend, sized("dim ker pi_q = 2^N - (N+1)", np),
                       ik.kernel_basis.size() == pdim - static_cast<index_t>(np + 1));
    double orth = 0.0;
    double annihilated = 0.0;
    const std::vector<S> zero(pdim, backend.zero());
    for (const auto& k : ik.kernel_basis) {
      annihilated = std::max(annihilated, residual(pi.apply(k), zero));
      for (const auto& d : ik.image_basis) orth = std::max(orth, magnitude(q_inner(k, d.amplitudes, pmetric)));
    }
    report.record(backend, sized("pi_q annihilates the kernel basis", np), annihilated);
    report.record(backend, sized("ker pi_q is Q-orthogonal to the q-Dicke states", np), orth);
  }

  const double asym = residual(pi.transpose(), pi);
  bool classical = false;
  if constexpr (!B::is_exact) classical = backend.q == 1.0;
  if (classical) {
    report.record(backend, sized("pi_q is a standard orthogonal projector at q = 1", np), asym);
  } else if (np >= 2) {
    report.record_bool(backend, sized("pi_q is not self-adjoint in the standard product for q != 1", np), asym > 0.0,
                       "residual " + std::to_string(asym));
  }
  return report;
}

// ---------------------------------------------------------------------------
// decompose (numeric only)

inline VerificationReport spectrum_suite(int n, const NumericBackend& backend) {
  using detail::sized;
  VerificationReport report;
  const auto sectors = casimir_sectors(n, backend.q);
  report.record_bool(backend, sized("sector dimension sum = 2^N", n),
                     sectors.total_dimension() == static_cast<int>(chain_dimension(n)));
  double eig = 0.0;
  for (const auto& s : sectors.sectors) eig = std::max(eig, std::abs(s.casimir_eigenvalue - s.expected_eigenvalue));
  report.record(backend, sized("sector Casimir eigenvalues = [j]_q[j+1]_q", n), eig);
  const auto classical = casimir_sectors(n, 1.0);
  bool same = classical.sectors.size() == sectors.sectors.size();
  for (std::size_t k = 0; same && k < sectors.sectors.size(); ++k)
    same = sectors.sectors[k].two_j == classical.sectors[k].two_j &&
           sectors.sectors[k].multiplicity == classical.sectors[k].multiplicity;
  report.record_bool(backend, sized("sector multiplicities equal their q = 1 values", n), same);
  report.merge(symmetric_sector_check(n, backend.q));
  return report;
}

// ---------------------------------------------------------------------------

/// Run a named suite. "all" merges every module in a fixed order; the
/// modules run concurrently but the merge order does not depend on timing.
template <Backend B>
VerificationReport run_suite(const std::string& name, int n, const B& backend, const SuiteOptions& opts = {}) {
  check_sites(n);
  if (name == "site") return site_suite(backend);
  if (name == "coproduct") return coproduct_suite(n, backend, opts);
  if (name == "dicke") return dicke_suite(n, backend);
  if (name == "symgroup") return symgroup_suite(n, backend, opts);
  if (name == "hecke") return hecke_suite(n, backend);
  if (name == "metric") return metric_suite(n, backend, opts);
  if (name != "all") throw std::invalid_argument("unknown suite: " + name);

  std::vector<std::future<VerificationReport>> parts;
  parts.push_back(std::async(std::launch::async, [&] { return site_suite(backend); }));
  parts.push_back(std::async(std::launch::async, [&] { return coproduct_suite(n, backend, opts); }));
  parts.push_back(std::async(std::launch::async, [&] { return dicke_suite(n, backend); }));
  parts.push_back(std::async(std::launch::async, [&] { return symgroup_suite(n, backend, opts); }));
  parts.push_back(std::async(std::launch::async, [&] { return hecke_suite(n, backend); }));
  parts.push_back(std::async(std::launch::async, [&] { return metric_suite(n, backend, opts); }));
  if constexpr (!B::is_exact) {
    if (n <= kMaxSpectrumSites)
      parts.push_back(std::async(std::launch::async, [&] { return spectrum_suite(n, backend); }));
  }
  VerificationReport report;
  for (auto& p : parts) report.merge(p.get());
  return report;
}

}  // namespace qsym
