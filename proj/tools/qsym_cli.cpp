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


// qsym: emit q-symmetric chain objects, verify identity suites, and print
// Casimir sector tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap exceeded.

#include "qsym/qsym.hpp"
#include "qsym/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qsym;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

constexpr int kDefaultMaxExact = 6;
constexpr int kDefaultMaxNumeric = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  int m = -1;
  int i = 1;
  std::string q_text = "1";
  double q = 1.0;
  bool exact = false;
  std::string format = "json";
  std::string out;
  std::string perm;
  std::uint64_t seed = SuiteOptions{}.seed;
  int max_n = 0;  // 0: the per-backend default
};

/// Decimal or "p/q"; rationals are reduced exactly before conversion.
double parse_q(const std::string& text) {
  double q = 0.0;
  try {
    if (text.find('/') != std::string::npos) {
      q = parse_rational(text).convert_to<double>();
    } else {
      std::size_t used = 0;
      q = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw UsageError("--q: cannot parse '" + text + "' as a decimal or p/q");
  }
  if (!(q > 0.0) || !std::isfinite(q)) throw UsageError("--q must be a positive real");
  return q;
}

void check_size(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  const int cap = cfg.max_n > 0 ? cfg.max_n : (cfg.exact ? kDefaultMaxExact : kDefaultMaxNumeric);
  if (cfg.n > cap)
    throw ResourceCapExceeded("N = " + std::to_string(cfg.n) + " exceeds the " + (cfg.exact ? "exact" : "numeric") +
                              " cap of " + std::to_string(cap) + " (raise with --max-n)");
}

Permutation parse_perm(const std::string& text, int n) {
  if (text.empty()) return Permutation::reversal(n);
  std::vector<int> images;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      images.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("--perm: bad image '" + item + "'");
    }
  }
  if (static_cast<int>(images.size()) != n) throw UsageError("--perm must list exactly N images");
  try {
    return Permutation(images);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--perm: ") + e.what());
  }
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(cfg.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("QSYM_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path.string());
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class T>
std::string render(const T& object, const RunConfig& cfg, json header) {
  const Format f = parse_format(cfg.format);
  if (f == Format::Csv) return to_csv(object);
  if (f == Format::Pretty) return to_pretty(object);
  const json body = to_json(object);
  for (const auto& [k, v] : body.items()) header[k] = v;
  return dump(header);
}

template <Backend B>
json header_for(const std::string& object, const RunConfig& cfg, const B& backend) {
  json h{{"object", object}, {"backend", backend.name()}};
  if constexpr (B::is_exact)
    h["q"] = nullptr;
  else
    h["q"] = backend.q;
  h["n_sites"] = cfg.n;
  return h;
}

void require_index(const RunConfig& cfg) {
  if (cfg.n < 2) throw UsageError("this object needs --n >= 2");
  if (cfg.i < 1 || cfg.i >= cfg.n) throw UsageError("--i must be in [1, N-1]");
}

template <Backend B>
std::string emit(const std::string& object, const RunConfig& cfg, const B& backend) {
  const auto h = header_for(object, cfg, backend);
  if (object == "qdicke") {
    if (cfg.m < 0 || cfg.m > cfg.n) throw UsageError("qdicke needs --m in [0, N]");
    return render(q_dicke(cfg.n, cfg.m, backend), cfg, h);
  }
  if (object == "qtransposition") {
    require_index(cfg);
    return render(q_transposition(cfg.i, cfg.n, backend), cfg, h);
  }
  if (object == "qperm") {
    const auto sigma = parse_perm(cfg.perm, cfg.n);
    auto header = h;
    header["permutation"] = to_json(sigma);
    header["diagram"] = to_json(crossing_counts(reduced_word(sigma), cfg.n));
    return render(q_perm_rep(sigma, backend), cfg, header);
  }
  if (object == "rmatrix") {
    require_index(cfg);
    return render(r_matrix_site(cfg.i, cfg.n, backend), cfg, h);
  }
  if (object == "hecke") {
    require_index(cfg);
    return render(hecke_generator(cfg.i, cfg.n, backend), cfg, h);
  }
  if (object == "projector") return render(projector(cfg.n, backend), cfg, h);
  if (object == "metric") return render(metric_matrix(cfg.n, backend), cfg, h);
  if (object == "ctau") return render(c_tau(cfg.n, backend), cfg, h);
  throw UsageError("unknown object '" + object + "'");
}

template <Backend B>
int verify(const std::string& suite, const RunConfig& cfg, const B& backend) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  const auto report = run_suite(suite, cfg.n, backend, opts);
  std::string text;
  const Format f = parse_format(cfg.format);
  if (f == Format::Json) {
    json doc{{"suite", suite}, {"n_sites", cfg.n}, {"backend", backend.name()}, {"seed", cfg.seed}};
    doc["pass"] = report.all_pass();
    doc["max_residual"] = report.max_residual();
    doc["checks"] = to_json(report);
    text = dump(doc);
  } else {
    text = f == Format::Csv ? to_csv(report) : to_pretty(report);
  }
  write_output(cfg, text);
  for (const auto& c : report.failures())
    std::cerr << "FAIL " << c.identity_name << " residual " << format_double(c.max_residual)
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  return report.all_pass() ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed symmetric subspace toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string object;
  std::string suite;

  auto add_common = [&](CLI::App* sub, bool numeric_only) {
    sub->add_option("--n", cfg.n, "number of sites")->required();
    sub->add_option("--q", cfg.q_text, "deformation parameter, decimal or p/q (default 1)");
    if (!numeric_only) sub->add_flag("--exact", cfg.exact, "exact symbolic backend (ignores --q)");
    sub->add_option("--format", cfg.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", cfg.out, "write to a file instead of stdout");
    sub->add_option("--max-n", cfg.max_n, "override the per-backend cap on N")->check(CLI::PositiveNumber);
  };

  auto* emit_cmd = app.add_subcommand("emit", "construct an object and print it");
  emit_cmd->add_option("object", object, "qdicke | qtransposition | qperm | rmatrix | hecke | projector | metric | ctau")
      ->required();
  add_common(emit_cmd, false);
  emit_cmd->add_option("--m", cfg.m, "number of up spins (qdicke)");
  emit_cmd->add_option("--i", cfg.i, "adjacent pair index (qtransposition, rmatrix, hecke)");
  emit_cmd->add_option("--perm", cfg.perm, "one-line images, e.g. 2,3,1 (qperm; default the reversal)");

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
  verify_cmd->add_option("suite", suite, "site | coproduct | dicke | symgroup | hecke | metric | all")->required();
  add_common(verify_cmd, false);
  verify_cmd->add_option("--seed", cfg.seed, "seed for sampled permutations and random states");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Casimir sector decomposition (numeric)");
  add_common(spectrum_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!cfg.exact) cfg.q = parse_q(cfg.q_text);
    check_size(cfg);
    if (*emit_cmd) {
      const std::string text =
          cfg.exact ? emit(object, cfg, ExactBackend{}) : emit(object, cfg, NumericBackend(cfg.q));
      write_output(cfg, text);
      return kExitPass;
    }
    if (*verify_cmd) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
      return cfg.exact ? verify(suite, cfg, ExactBackend{}) : verify(suite, cfg, NumericBackend(cfg.q));
    }
    if (cfg.n > kMaxSpectrumSites)
      throw ResourceCapExceeded("spectrum is capped at N = " + std::to_string(kMaxSpectrumSites));
    const auto sectors = casimir_sectors(cfg.n, cfg.q);
    json h{{"object", "spectrum"}};
    write_output(cfg, render(sectors, cfg, h));
    return kExitPass;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const ClusteringAmbiguity& e) {
    std::cerr << "clustering ambiguity: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
