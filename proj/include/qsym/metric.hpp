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

/// @file metric.hpp
/// The deformed inner product and the projector onto the q-symmetric
/// subspace.
///
/// Q(ψ, φ) = ⟨ψ| C(τ)⁻¹ |φ⟩ is diagonal and factorizes site by site as
/// q^(½(N+1−2i) J³ᵢ). Under Q the adjoint of an operator A is
/// A* = C(τ) Aᵀ C(τ)⁻¹, W^q becomes a *-unitary representation, and
///
///   π_q = (1/N!) Σ_σ W^q(σ)
///
/// is a Q-orthogonal projector. It is not self-adjoint for the standard
/// inner product unless q = 1.

#include "qsym/backend.hpp"
#include "qsym/basis.hpp"
#include "qsym/dense.hpp"
#include "qsym/dicke.hpp"
#include "qsym/exact_linalg.hpp"
#include "qsym/sparse.hpp"
#include "qsym/symgroup.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qsym {

/// Thrown when a request exceeds a configured size cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
struct MetricForm {
  int n_sites = 0;
  std::vector<S> diagonal;
};

/// Diagonal of ⊗ᵢ q^(½(N+1−2i) J³); equal to C(τ)⁻¹.
template <Backend B>
MetricForm<scalar_t<B>> metric_matrix(int n, const B& backend) {
  check_sites(n);
  const index_t dim = chain_dimension(n);
  MetricForm<scalar_t<B>> form{n, std::vector<scalar_t<B>>(dim)};
  for (index_t idx = 0; idx < dim; ++idx) {
    int quarter = 0;  // q^(½ w mᵢ) with mᵢ = ±½ is q^(±w/4)
    for (int i = 1; i <= n; ++i) quarter += (n + 1 - 2 * i) * site_two_m(idx, i, n);
    form.diagonal[idx] = backend.q_quarter_power(quarter);
  }
  return form;
}

template <class S>
SparseOperator<S> to_operator(const MetricForm<S>& form) {
  return SparseOperator<S>::diagonal(form.diagonal);
}

/// Q(φ, ψ) on raw amplitude vectors. Scalars are real, so conjugation of
/// the left slot is the identity.
template <class S>
S q_inner(const std::vector<S>& phi, const std::vector<S>& psi, const MetricForm<S>& metric) {
  if (phi.size() != metric.diagonal.size() || psi.size() != metric.diagonal.size())
    throw std::invalid_argument("q_inner: dimension mismatch");
  S total{};
  for (std::size_t i = 0; i < phi.size(); ++i) total += phi[i] * metric.diagonal[i] * psi[i];
  return total;
}

/// Q on states. For exact states the amplitudes are unnormalized, so the
/// result must be divided by sqrt(norm_sq(φ) norm_sq(ψ)) by the caller.
template <class S>
S q_inner(const QState<S>& phi, const QState<S>& psi, const MetricForm<S>& metric) {
  return q_inner(phi.amplitudes, psi.amplitudes, metric);
}

/// A* = C(τ) Aᵀ C(τ)⁻¹
template <Backend B>
SparseOperator<scalar_t<B>> star_adjoint(const SparseOperator<scalar_t<B>>& a, int n, const B& backend) {
  check_sites(n);
  const index_t dim = chain_dimension(n);
  if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("star_adjoint: dimension mismatch");
  const auto ctau = c_tau(n, backend);
  const auto ctau_inv = to_operator(metric_matrix(n, backend));
  return ctau * a.transpose() * ctau_inv;
}

struct ProjectorOptions {
  int max_sites_exact = 5;
  int max_sites_numeric = 8;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// π_q = (1/N!) Σ_σ W^q(σ).
///
/// S_N is enumerated in lexicographic order and cut into chunks of a fixed
/// size. Partial sums are added in chunk order, so the floating-point result
/// is the same for every thread count.
inline constexpr std::size_t kProjectorChunk = 24;

template <Backend B>
SparseOperator<scalar_t<B>> projector(int n, const B& backend, const ProjectorOptions& opts = {}) {
  check_sites(n);
  const int cap = B::is_exact ? opts.max_sites_exact : opts.max_sites_numeric;
  if (n > cap)
    throw ResourceCapExceeded("projector: N = " + std::to_string(n) + " exceeds the " + backend.name() +
                              " cap of " + std::to_string(cap));
  using Op = SparseOperator<scalar_t<B>>;
  const auto perms = all_permutations(n);
  const index_t dim = chain_dimension(n);
  const std::size_t n_chunks = (perms.size() + kProjectorChunk - 1) / kProjectorChunk;

  auto partial = [&](std::size_t c) {
    Op sum(dim);
    const std::size_t end = std::min(perms.size(), (c + 1) * kProjectorChunk);
    for (std::size_t k = c * kProjectorChunk; k < end; ++k) sum += q_perm_rep(perms[k], backend);
    return sum;
  };

  const unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  std::vector<Op> parts(n_chunks, Op(dim));
  if (threads == 1 || n_chunks == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) parts[c] = partial(c);
  } else {
    // Run at most `threads` chunks at a time.
    for (std::size_t first = 0; first < n_chunks; first += threads) {
      std::vector<std::future<Op>> batch;
      for (std::size_t c = first; c < std::min(n_chunks, first + threads); ++c)
        batch.push_back(std::async(std::launch::async, partial, c));
      for (std::size_t b = 0; b < batch.size(); ++b) parts[first + b] = batch[b].get();
    }
  }
  Op total(dim);
  for (const auto& p : parts) total += p;
  return total * backend.from_ratio(1, static_cast<long long>(perms.size()));
}

template <class S>
struct ImageKernel {
  std::vector<QState<S>> image_basis;
  std::vector<std::vector<S>> kernel_basis;
  bool kernel_available = true;  ///< false when kernel extraction exceeded its cap
};

inline constexpr int kMaxExactKernelSites = 3;

/// Image (the q-Dicke states) and a kernel basis of an idempotent operator on N sites.
template <Backend B>
ImageKernel<scalar_t<B>> image_kernel(const SparseOperator<scalar_t<B>>& proj, int n, const B& backend) {
  using S = scalar_t<B>;
  check_sites(n);
  if (proj.rows() != chain_dimension(n) || !proj.is_square())
    throw std::invalid_argument("image_kernel: dimension mismatch");
  const double idem = residual(proj * proj, proj);
  if (B::is_exact ? idem != 0.0 : idem > backend.tolerance())
    throw std::invalid_argument("image_kernel: operator is not idempotent (residual " + std::to_string(idem) + ")");

  ImageKernel<S> out;
  out.image_basis = q_symmetric_basis(n, backend);
  for (const auto& d : out.image_basis) {
    const double r = residual(proj.apply(d.amplitudes), d.amplitudes);
    if (B::is_exact ? r != 0.0 : r > backend.tolerance())
      throw std::logic_error("image_kernel: q-Dicke state m = " + std::to_string(d.m) + " is not fixed");
  }

  if constexpr (B::is_exact) {
    if (n > kMaxExactKernelSites)
      throw ResourceCapExceeded("image_kernel: exact kernel extraction is capped at N = " +
                                std::to_string(kMaxExactKernelSites));
    out.kernel_basis = exact_nullspace(proj);
  } else {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(proj));
    lu.setThreshold(1e-10);
    if (lu.dimensionOfKernel() == 0) return out;
    const Eigen::MatrixXd kernel = orthonormal_basis(lu.kernel());
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) out.kernel_basis.push_back(from_eigen(kernel.col(c)));
  }
  return out;
}

/// image_kernel, but an exact kernel over the size cap is reported as
/// unavailable instead of throwing. The image checks still run.
template <Backend B>
ImageKernel<scalar_t<B>> image_kernel_capped(const SparseOperator<scalar_t<B>>& proj, int n, const B& backend) {
  if (B::is_exact && n > kMaxExactKernelSites) {
    const auto r = residual(proj * proj, proj);
    if (r != 0.0) throw std::invalid_argument("image_kernel: operator is not idempotent");
    ImageKernel<scalar_t<B>> out;
    out.image_basis = q_symmetric_basis(n, backend);
    out.kernel_available = false;
    return out;
  }
  return image_kernel(proj, n, backend);
}

/// Rank of a projector from its trace.
template <class S>
S trace(const SparseOperator<S>& a) {
  S t{};
  for (index_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a.at(i, i);
  return t;
}

}  // namespace qsym
