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

/// @file decompose.hpp
/// Splitting the chain into U_q(su(2)) sectors by diagonalizing the
/// deformed chain Casimir.

#include "qsym/backend.hpp"
#include "qsym/coproduct.hpp"
#include "qsym/dense.hpp"
#include "qsym/dicke.hpp"
#include "qsym/report.hpp"
#include "qsym/symgroup.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

/// Eigenvalue clusters closer than a third of the smallest gap between
/// candidate sector eigenvalues cannot be attributed reliably.
class ClusteringAmbiguity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sector {
  int two_j = 0;
  double casimir_eigenvalue = 0.0;  ///< mean of the cluster
  double expected_eigenvalue = 0.0;  ///< [j]_q [j+1]_q
  int multiplicity = 0;
  int dimension_check = 0;  ///< multiplicity · (2j + 1)
};

struct SectorReport {
  int n_sites = 0;
  double q = 1.0;
  std::vector<Sector> sectors;  ///< descending j

  [[nodiscard]] int total_dimension() const {
    int total = 0;
    for (const auto& s : sectors) total += s.dimension_check;
    return total;
  }
};

inline constexpr int kMaxSpectrumSites = 10;
inline constexpr double kClusterTolerance = 1e-8;

inline SectorReport casimir_sectors(int n, double q) {
  if (n < 1 || n > kMaxSpectrumSites)
    throw std::invalid_argument("casimir_sectors: N must be in [1, " + std::to_string(kMaxSpectrumSites) + "]");
  const NumericBackend backend(q);

  // Candidate sectors j = N/2, N/2 - 1, ... down to 0 or 1/2.
  std::vector<int> candidates;
  for (int two_j = n; two_j >= 0; two_j -= 2) candidates.push_back(two_j);
  std::vector<double> expected;
  for (int two_j : candidates) expected.push_back(casimir_eigenvalue(IrrepLabel{two_j}, backend));

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < expected.size(); ++a)
    for (std::size_t b = a + 1; b < expected.size(); ++b) min_gap = std::min(min_gap, std::abs(expected[a] - expected[b]));
  if (!(kClusterTolerance < min_gap / 3.0))
    throw ClusteringAmbiguity("casimir_sectors: sector eigenvalues are closer than 3x the clustering tolerance");

  const Eigen::MatrixXd c = to_eigen(chain_casimir(n, backend));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(c, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("casimir_sectors: eigensolver failed");

  // Scale-aware tolerance: deformed eigenvalues grow like q^(N/2).
  const double scale = std::max(1.0, std::abs(expected.front()));
  const double tol = kClusterTolerance * scale;

  SectorReport report{n, q, {}};
  std::vector<int> counts(candidates.size(), 0);
  std::vector<double> sums(candidates.size(), 0.0);
  const auto& evals = solver.eigenvalues();
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    std::size_t hit = candidates.size();
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (std::abs(evals(k) - expected[a]) <= tol) {
        if (hit != candidates.size())
          throw ClusteringAmbiguity("casimir_sectors: eigenvalue matches two sectors");
        hit = a;
      }
    }
    if (hit == candidates.size())
      throw ClusteringAmbiguity("casimir_sectors: eigenvalue " + std::to_string(evals(k)) +
                                " matches no [j]_q[j+1]_q within tolerance");
    ++counts[hit];
    sums[hit] += evals(k);
  }
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (counts[a] == 0) continue;
    const int dim = candidates[a] + 1;
    if (counts[a] % dim != 0)
      throw ClusteringAmbiguity("casimir_sectors: cluster size not a multiple of 2j+1");
    report.sectors.push_back({candidates[a], sums[a] / counts[a], expected[a], counts[a] / dim, counts[a]});
  }
  return report;
}

/// Orthonormal basis of the top (j = N/2) Casimir eigenspace.
inline Eigen::MatrixXd top_casimir_eigenspace(int n, double q) {
  const NumericBackend backend(q);
  const Eigen::MatrixXd c = to_eigen(chain_casimir(n, backend));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(c);
  if (solver.info() != Eigen::Success) throw std::runtime_error("top_casimir_eigenspace: eigensolver failed");
  // eigenvalues ascend; j = N/2 has the largest Casimir value and dimension N+1
  const auto dim = static_cast<Eigen::Index>(n + 1);
  return solver.eigenvectors().rightCols(dim);
}

inline Eigen::MatrixXd q_dicke_span(int n, double q) {
  const NumericBackend backend(q);
  const auto basis = q_symmetric_basis(n, backend);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(chain_dimension(n)), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = to_eigen(basis[k].amplitudes);
  return m;
}

/// Fixed space of all W(σ): the kernel of the stacked (W(t_i) − 1).
inline Eigen::MatrixXd permutation_fixed_space(int n) {
  const NumericBackend backend(1.0);
  const auto dim = static_cast<Eigen::Index>(chain_dimension(n));
  if (n == 1) return Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd stacked(dim * (n - 1), dim);
  for (int i = 1; i < n; ++i)
    stacked.middleRows(dim * (i - 1), dim) =
        to_eigen(perm_rep(Permutation::transposition(i, n), backend)) - Eigen::MatrixXd::Identity(dim, dim);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > 1e-10) ++rank;
  return svd.matrixV().rightCols(dim - rank);
}

inline VerificationReport symmetric_sector_check(int n, double q) {
  const NumericBackend backend(q);
  VerificationReport report;
  const std::string tag = "N=" + std::to_string(n) + " ";
  const Eigen::MatrixXd top = top_casimir_eigenspace(n, q);
  const Eigen::MatrixXd dicke_span = orthonormal_basis(q_dicke_span(n, q));
  report.record_bool(backend, tag + "q-Dicke span has dimension N+1", dicke_span.cols() == n + 1);

  // The top block is only an eigenspace if it is separated from the next sector.
  const auto sectors = casimir_sectors(n, q);
  report.record_bool(backend, tag + "top sector is j = N/2 with multiplicity 1",
                     !sectors.sectors.empty() && sectors.sectors.front().two_j == n &&
                         sectors.sectors.front().multiplicity == 1);

  IdentityCheck angle;
  angle.identity_name = tag + "top Casimir eigenspace = q-Dicke span (sin of max principal angle)";
  angle.backend = backend.name();
  angle.q_values = {q};
  angle.max_residual = max_principal_sine(top, dicke_span);
  angle.pass = angle.max_residual < 1e-8;
  report.add(angle);

  if (q == 1.0) {
    const Eigen::MatrixXd fixed = permutation_fixed_space(n);
    IdentityCheck classical;
    classical.identity_name = tag + "q=1 permutation-fixed space = top Casimir eigenspace";
    classical.backend = backend.name();
    classical.q_values = {q};
    classical.max_residual = max_principal_sine(top, fixed);
    classical.pass = classical.max_residual < 1e-8;
    report.add(classical);
  }
  return report;
}

}  // namespace qsym
