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

/// @file report.hpp
/// Pass/fail records for identity suites.

#include "qsym/backend.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

struct IdentityCheck {
  std::string identity_name;
  std::string backend;
  std::vector<double> q_values;
  double max_residual = 0.0;
  bool pass = false;
  std::string detail;  ///< set when the check could not be evaluated
};

class VerificationReport {
 public:
  void add(IdentityCheck check) { checks_.push_back(std::move(check)); }

  /// Record a residual against the backend's tolerance.
  template <Backend B>
  void record(const B& backend, std::string name, double residual) {
    IdentityCheck c;
    c.identity_name = std::move(name);
    c.backend = backend.name();
    c.q_values = backend.q_values();
    c.max_residual = residual;
    c.pass = B::is_exact ? residual == 0.0 : residual < backend.tolerance();
    checks_.push_back(std::move(c));
  }

  /// Record a boolean property (residual 0 on success, 1 on failure).
  template <Backend B>
  void record_bool(const B& backend, std::string name, bool ok, std::string detail = {}) {
    IdentityCheck c;
    c.identity_name = std::move(name);
    c.backend = backend.name();
    c.q_values = backend.q_values();
    c.max_residual = ok ? 0.0 : 1.0;
    c.pass = ok;
    c.detail = std::move(detail);
    checks_.push_back(std::move(c));
  }

  void merge(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  [[nodiscard]] const std::vector<IdentityCheck>& checks() const noexcept { return checks_; }
  [[nodiscard]] bool all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const IdentityCheck& c) { return c.pass; });
  }
  [[nodiscard]] double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks_) m = std::max(m, c.max_residual);
    return m;
  }
  [[nodiscard]] std::vector<IdentityCheck> failures() const {
    std::vector<IdentityCheck> out;
    std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out),
                 [](const IdentityCheck& c) { return !c.pass; });
    return out;
  }

 private:
  std::vector<IdentityCheck> checks_;
};

}  // namespace qsym
