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

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "oddrank/classify.hpp"
#include "oddrank/invariants.hpp"
#include "oddrank/named_states.hpp"

namespace oddrank {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent per-trial stream from (seed, stream tag, n, trial),
/// so serial and parallel execution orders see identical randomness.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t n, std::uint64_t trial) {
  return std::mt19937_64(
      splitmix64(seed ^ splitmix64(stream ^ splitmix64(n ^ splitmix64(trial)))));
}

/// Uniform in [-1, 1]; generated from raw engine bits so replay does not
/// depend on library distribution internals.
inline double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

inline complex_t random_complex(std::mt19937_64& rng) {
  const double re = uniform_pm1(rng);
  const double im = uniform_pm1(rng);
  return {re, im};
}

/// Random invertible local operator: entries with real and imaginary parts
/// uniform in [-1, 1], redrawn until |det| >= 0.1 and condition number <= 20.
/// The conditioning floor keeps float residual thresholds meaningful.
inline LocalOperator<complex_t> random_local_operator(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Eigen::Matrix2cd m;
    m(0, 0) = random_complex(rng);
    m(0, 1) = random_complex(rng);
    m(1, 0) = random_complex(rng);
    m(1, 1) = random_complex(rng);
    const double abs_det = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    if (abs_det < 0.1) continue;
    const SingularPair sv = singular_values_2x2(m);
    if (sv.minor <= 0.0 || sv.major / sv.minor > 20.0) continue;
    return LocalOperator<complex_t>(std::move(m));
  }
  throw std::runtime_error(
      "random_local_operator: rejection sampling failed after 1000 draws");
}

inline SloccMap<complex_t> random_slocc_map(int n, std::mt19937_64& rng) {
  SloccMap<complex_t> map;
  map.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) map.push_back(random_local_operator(rng));
  return map;
}

/// Unnormalized random state with amplitude components uniform in [-1, 1].
inline FloatState random_state(int n, std::mt19937_64& rng) {
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = random_complex(rng);
  return FloatState(n, std::move(v));
}

namespace detail {

/// Relative gap between two scalars pooled over a shared scale; falls back
/// to the absolute gap when the scale is below `floor`. Exact inputs that
/// agree produce exactly 0.
template <class Scalar>
double pooled_relative(const std::vector<Scalar>& lhs,
                       const std::vector<Scalar>& rhs, double floor) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    num = std::max(num, scalar_abs_double(lhs[i] - rhs[i]));
    den = std::max({den, scalar_abs_double(lhs[i]), scalar_abs_double(rhs[i])});
  }
  return den > floor ? num / den : num;
}

template <class Scalar>
double covariance_residual_impl(const PureState<Scalar>& psi_prime,
                                const SloccMap<Scalar>& map, int i,
                                const ToleranceConfig& tol, bool corrupt) {
  const int n = psi_prime.num_qubits();
  if (static_cast<int>(map.size()) != n) {
    throw std::invalid_argument("covariance_residual: map length mismatch");
  }
  check_qubit_index(n, i, "covariance_residual");

  const PureState<Scalar> psi = apply_slocc(psi_prime, map);
  const auto lhs = coefficient_matrix(psi, i).m;
  const auto mp = coefficient_matrix(psi_prime, i).m;

  Scalar det_rest = Scalar(1);
  for (int j = 1; j <= n; ++j) {
    if (j != i) det_rest = det_rest * map[static_cast<std::size_t>(j - 1)].determinant();
  }
  const auto& ai = map[static_cast<std::size_t>(i - 1)].matrix();
  Eigen::Matrix<Scalar, 2, 2> rhs = ai * mp * ai.transpose();
  rhs = rhs * det_rest;
  if (corrupt) {
    // Self-test hook: a 1% miscalibration of the right-hand side, so the
    // harness is demonstrably able to detect a broken covariance law.
    rhs = rhs * (Scalar(101) / Scalar(100));
  }

  double num = 0.0;
  double den = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      num = std::max(num, scalar_abs_double(lhs(r, c) - rhs(r, c)));
      den = std::max(den, scalar_abs_double(lhs(r, c)));
    }
  }
  return den > tol.residual_epsilon ? num / den : num;
}

}  // namespace detail

/// Residual of the covariance law for qubit i: with psi = map applied to
/// psi_prime,
///   M^(i)(psi) = A_i M^(i)(psi_prime) A_i^T  prod_{j != i} det A_j.
/// Max-entry gap normalized by the max entry of M^(i)(psi), absolute when
/// that scale is below residual_epsilon. Exactly 0 in rational mode.
template <class Scalar>
double covariance_residual(const PureState<Scalar>& psi_prime,
                           const SloccMap<Scalar>& map, int i,
                           const ToleranceConfig& tol = {}) {
  return detail::covariance_residual_impl(psi_prime, map, i, tol, false);
}

/// Residual of the determinant relation
///   det M^(i)(psi) = det M^(i)(psi_prime) [prod_j det A_j]^2.
template <class Scalar>
double det_relation_residual(const PureState<Scalar>& psi_prime,
                             const SloccMap<Scalar>& map, int i,
                             const ToleranceConfig& tol = {}) {
  const int n = psi_prime.num_qubits();
  if (static_cast<int>(map.size()) != n) {
    throw std::invalid_argument("det_relation_residual: map length mismatch");
  }
  detail::check_qubit_index(n, i, "det_relation_residual");

  const PureState<Scalar> psi = apply_slocc(psi_prime, map);
  const Scalar det_lhs = coefficient_matrix(psi, i).determinant();
  Scalar det_all = Scalar(1);
  for (const auto& op : map) det_all = det_all * op.determinant();
  const Scalar det_rhs =
      coefficient_matrix(psi_prime, i).determinant() * det_all * det_all;

  return detail::pooled_relative<Scalar>({det_lhs}, {det_rhs},
                                         tol.residual_epsilon);
}

/// Checks the closed forms for a qubit-1 operator A1 = (a1 a2; a3 a4):
///   T' = P a1 a3 + T (a2 a3 + a1 a4) + Q a2 a4
///   P' = P a1^2 + 2 T a1 a2 + Q a2^2
///   Q' = P a3^2 + 2 T a3 a4 + Q a4^2
/// against the triple of the transformed state. Returns the max gap over
/// the three equations, relative to the pooled magnitude of all six values.
template <class Scalar>
double lemma1_check(const PureState<Scalar>& state,
                    const LocalOperator<Scalar>& a1,
                    const ToleranceConfig& tol = {}) {
  const QuantityTriple<Scalar> before = compute_tpq(state);
  const QuantityTriple<Scalar> after =
      compute_tpq(apply_local_operator(state, 1, a1));

  const Scalar& m1 = a1.matrix()(0, 0);
  const Scalar& m2 = a1.matrix()(0, 1);
  const Scalar& m3 = a1.matrix()(1, 0);
  const Scalar& m4 = a1.matrix()(1, 1);
  const Scalar two = Scalar(2);

  const Scalar t_pred =
      before.p * m1 * m3 + before.t * (m2 * m3 + m1 * m4) + before.q * m2 * m4;
  const Scalar p_pred =
      before.p * m1 * m1 + two * before.t * m1 * m2 + before.q * m2 * m2;
  const Scalar q_pred =
      before.p * m3 * m3 + two * before.t * m3 * m4 + before.q * m4 * m4;

  return detail::pooled_relative<Scalar>({after.t, after.p, after.q},
                                         {t_pred, p_pred, q_pred},
                                         tol.residual_epsilon);
}

/// Checks that an operator on qubit k >= 2 multiplies each of T, P, Q by
/// det A_k. k = 1 is rejected: the qubit-1 law is lemma1_check.
template <class Scalar>
double lemma2_check(const PureState<Scalar>& state, int k,
                    const LocalOperator<Scalar>& ak,
                    const ToleranceConfig& tol = {}) {
  const int n = state.num_qubits();
  if (k < 2 || k > n) {
    throw std::out_of_range("lemma2_check: k must satisfy 2 <= k <= n");
  }
  const QuantityTriple<Scalar> before = compute_tpq(state);
  const QuantityTriple<Scalar> after =
      compute_tpq(apply_local_operator(state, k, ak));
  const Scalar d = ak.determinant();

  return detail::pooled_relative<Scalar>(
      {after.t, after.p, after.q},
      {before.t * d, before.p * d, before.q * d}, tol.residual_epsilon);
}

/// Residual of the transposition identity: swapping qubits p and q after a
/// SLOCC map equals applying the map with operators p and q exchanged to the
/// swapped state.
template <class Scalar>
double tensor_identity_residual(const PureState<Scalar>& state,
                                const SloccMap<Scalar>& map, int p, int q,
                                const ToleranceConfig& tol = {}) {
  const int n = state.num_qubits();
  if (static_cast<int>(map.size()) != n) {
    throw std::invalid_argument("tensor_identity_residual: map length mismatch");
  }
  detail::check_qubit_index(n, p, "tensor_identity_residual");
  detail::check_qubit_index(n, q, "tensor_identity_residual");

  const PureState<Scalar> lhs = swap_qubits(apply_slocc(state, map), p, q);
  SloccMap<Scalar> exchanged = map;
  std::swap(exchanged[static_cast<std::size_t>(p - 1)],
            exchanged[static_cast<std::size_t>(q - 1)]);
  const PureState<Scalar> rhs =
      apply_slocc(swap_qubits(state, p, q), exchanged);

  std::vector<Scalar> l(static_cast<std::size_t>(lhs.size()));
  std::vector<Scalar> r(static_cast<std::size_t>(rhs.size()));
  for (Eigen::Index i = 0; i < lhs.size(); ++i) {
    l[static_cast<std::size_t>(i)] = lhs[i];
    r[static_cast<std::size_t>(i)] = rhs[i];
  }
  return detail::pooled_relative<Scalar>(l, r, tol.residual_epsilon);
}

/// Aggregate of a randomized covariance run. A passing run has residual
/// maxima under the configured threshold and zero rank mismatches; trials
/// whose rank decision was boundary-flagged are excluded from the mismatch
/// count and reported separately.
struct CovarianceReport {
  std::uint64_t seed = 0;
  long trials = 0;
  double max_matrix_residual = 0.0;
  double max_det_residual = 0.0;
  long rank_mismatches = 0;
  long boundary_trials = 0;
};

struct LemmaReport {
  std::uint64_t seed = 0;
  long trials = 0;
  double max_lemma1 = 0.0;
  double max_lemma2 = 0.0;
};

struct OracleReport {
  std::uint64_t seed = 0;
  long trials = 0;
  double max_relative = 0.0;
};

struct SuiteConfig {
  long trials = 200;
  std::vector<int> ns = {3, 5};
  std::uint64_t seed = 42;
  ToleranceConfig tol;
  bool include_canonical = true;
  /// Self-test hook: scales the covariance right-hand side so the harness
  /// must report a failure.
  bool corrupt_covariance = false;
};

CovarianceReport run_covariance_suite(const SuiteConfig& config);
LemmaReport run_lemma_suite(const SuiteConfig& config);
OracleReport run_alt_oracle_suite(const SuiteConfig& config);

}  // namespace oddrank
