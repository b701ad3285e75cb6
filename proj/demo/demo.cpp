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


// Builds the three-site q-Dicke states and the q-symmetrizer, then checks
// that the projector fixes each state, both symbolically and at q = 2.

#include "qsym/qsym.hpp"

#include <iostream>

int main() {
  using namespace qsym;
  const ExactBackend exact;
  const int n = 3;

  std::cout << "q-Dicke states on " << n << " sites (s = q^(1/4)):\n";
  for (const auto& d : q_symmetric_basis(n, exact)) {
    std::cout << "  m=" << d.m << "  norm^2 = " << d.norm_sq << "\n";
    for (index_t k = 0; k < d.amplitudes.size(); ++k)
      if (!d.amplitudes[k].is_zero()) std::cout << "    |" << basis_label(k, n) << ">  " << d.amplitudes[k] << "\n";
  }

  const auto pi = projector(n, exact);
  bool fixed = true;
  for (const auto& d : q_symmetric_basis(n, exact)) fixed = fixed && pi.apply(d.amplitudes) == d.amplitudes;
  std::cout << "pi_q fixes every q-Dicke state: " << (fixed ? "yes" : "no") << "\n";
  std::cout << "trace(pi_q) = " << trace(pi) << "\n";

  const NumericBackend numeric(2.0);
  const auto report = run_suite("all", n, numeric);
  std::cout << "identity suite at q=2: " << report.checks().size() << " checks, "
            << (report.all_pass() ? "all pass" : "failures") << ", max residual " << report.max_residual() << "\n";
  return fixed && report.all_pass() ? 0 : 1;
}
