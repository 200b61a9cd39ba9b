// Copyright 2026 The oddrank authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oddrank/verify.hpp"

namespace oddrank {

namespace {

constexpr std::uint64_t kCovarianceStream = 0x636f7661;  // "cova"
constexpr std::uint64_t kLemmaStream = 0x6c656d6d;       // "lemm"
constexpr std::uint64_t kOracleStream = 0x6f726163;      // "orac"
constexpr std::uint64_t kCanonicalBase = 1u << 20;

void check_ns(const std::vector<int>& ns) {
  for (int n : ns) {
    if (n < 3 || n % 2 == 0) {
      throw std::invalid_argument(
          "verification suites accept odd n >= 3 only, got n = " +
          std::to_string(n));
    }
  }
}

/// Canonical states exercised alongside the random draws: they sit on the
/// rank strata (0, 1 and 2) that random states essentially never reach.
std::vector<FloatState> canonical_pool(int n) {
  std::vector<FloatState> pool;
  pool.push_back(ghz_state<complex_t>(n));
  pool.push_back(w_state<complex_t>(n));
  pool.push_back(dicke_state<complex_t>(n, (n - 1) / 2));
  pool.push_back(dicke_state<complex_t>(n, (n + 1) / 2));
  pool.push_back(FloatState::basis(n, 0));
  return pool;
}

void covariance_trial(const FloatState& psi_prime,
                      const SloccMap<complex_t>& map,
                      const SuiteConfig& config, CovarianceReport& report) {
  const int n = psi_prime.num_qubits();
  const FloatState psi = apply_slocc(psi_prime, map);

  bool boundary = false;
  bool mismatch = false;
  for (int i = 1; i <= n; ++i) {
    report.max_matrix_residual =
        std::max(report.max_matrix_residual,
                 detail::covariance_residual_impl(psi_prime, map, i,
                                                  config.tol,
                                                  config.corrupt_covariance));
    report.max_det_residual =
        std::max(report.max_det_residual,
                 det_relation_residual(psi_prime, map, i, config.tol));
    const Rank before = rank_wrt_qubit(psi_prime, i, config.tol);
    const Rank after = rank_wrt_qubit(psi, i, config.tol);
    boundary = boundary || before.boundary || after.boundary;
    mismatch = mismatch || before.value != after.value;
  }
  ++report.trials;
  if (boundary) {
    ++report.boundary_trials;
  } else if (mismatch) {
    ++report.rank_mismatches;
  }
}

}  // namespace

CovarianceReport run_covariance_suite(const SuiteConfig& config) {
  check_ns(config.ns);
  CovarianceReport report;
  report.seed = config.seed;
  if (config.trials <= 0) return report;

  for (int n : config.ns) {
    const auto un = static_cast<std::uint64_t>(n);
    for (long t = 0; t < config.trials; ++t) {
      auto rng = trial_rng(config.seed, kCovarianceStream, un,
                           static_cast<std::uint64_t>(t));
      const FloatState psi_prime = random_state(n, rng);
      const SloccMap<complex_t> map = random_slocc_map(n, rng);
      covariance_trial(psi_prime, map, config, report);
    }
    if (config.include_canonical) {
      const auto pool = canonical_pool(n);
      for (std::size_t c = 0; c < pool.size(); ++c) {
        auto rng = trial_rng(config.seed, kCovarianceStream, un,
                             kCanonicalBase + c);
        const SloccMap<complex_t> map = random_slocc_map(n, rng);
        covariance_trial(pool[c], map, config, report);
      }
    }
  }
  return report;
}

LemmaReport run_lemma_suite(const SuiteConfig& config) {
  check_ns(config.ns);
  LemmaReport report;
  report.seed = config.seed;
  if (config.trials <= 0) return report;

  for (int n : config.ns) {
    const auto un = static_cast<std::uint64_t>(n);
    for (long t = 0; t < config.trials; ++t) {
      auto rng = trial_rng(config.seed, kLemmaStream, un,
                           static_cast<std::uint64_t>(t));
      const FloatState state = random_state(n, rng);
      const auto a1 = random_local_operator(rng);
      report.max_lemma1 =
          std::max(report.max_lemma1, lemma1_check(state, a1, config.tol));
      for (int k = 2; k <= n; ++k) {
        const auto ak = random_local_operator(rng);
        report.max_lemma2 = std::max(report.max_lemma2,
                                     lemma2_check(state, k, ak, config.tol));
      }
      ++report.trials;
    }
  }
  return report;
}

OracleReport run_alt_oracle_suite(const SuiteConfig& config) {
  check_ns(config.ns);
  OracleReport report;
  report.seed = config.seed;
  if (config.trials <= 0) return report;

  for (int n : config.ns) {
    const auto un = static_cast<std::uint64_t>(n);
    for (long t = 0; t < config.trials; ++t) {
      auto rng = trial_rng(config.seed, kOracleStream, un,
                           static_cast<std::uint64_t>(t));
      const FloatState state = random_state(n, rng);
      const QuantityTriple<complex_t> direct = compute_tpq(state);
      const QuantityTriple<complex_t> alt = compute_tpq_alt(state);
      report.max_relative = std::max(
          report.max_relative,
          detail::pooled_relative<complex_t>({direct.t, direct.p, direct.q},
                                             {alt.t, alt.p, alt.q},
                                             config.tol.residual_epsilon));
      ++report.trials;
    }
  }
  return report;
}

}  // namespace oddrank
