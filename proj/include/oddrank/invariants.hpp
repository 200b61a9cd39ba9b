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

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>

#include "oddrank/rational.hpp"
#include "oddrank/state.hpp"

namespace oddrank {

/// The three quadratic forms T, P, Q evaluated on a state. Each is a signed
/// bilinear sum over amplitude pairs; scaling the state by c scales every
/// entry by c^2.
template <class Scalar>
struct QuantityTriple {
  Scalar t{0};
  Scalar p{0};
  Scalar q{0};
};

/// Numerical thresholds for float-mode decisions. Both must be strictly
/// positive; exact-rational code paths ignore them.
struct ToleranceConfig {
  double rank_epsilon = 1e-10;     // singular-value cutoff, unit-norm scale
  double residual_epsilon = 1e-8;  // covariance / determinant residual gate
};

/// Direct evaluation of the defining sums:
///   T = sum_{i<2^(n-1)} (-1)^N(i) a_i a_{2^n-i-1}
///   P = 2 sum_{i<2^(n-2)} (-1)^N(i) a_{2i} a_{2^(n-1)-2i-1}
///   Q = 2 sum_{i<2^(n-2)} (-1)^N(i) a_{2^(n-1)+2i} a_{2^n-2i-1}
/// T pairs each index with its bitwise complement; P and Q pair indices
/// within the qubit-1 = 0 and qubit-1 = 1 half-blocks respectively.
template <class Scalar>
QuantityTriple<Scalar> compute_tpq(const PureState<Scalar>& state) {
  const auto& a = state.amplitudes();
  const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
  const std::uint64_t half = dim / 2;
  const std::uint64_t quarter = dim / 4;

  QuantityTriple<Scalar> out;
  for (std::uint64_t i = 0; i < half; ++i) {
    const Scalar term = a[static_cast<Eigen::Index>(i)] *
                        a[static_cast<Eigen::Index>(dim - i - 1)];
    out.t += parity(i) ? -term : term;
  }
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const Scalar term = a[static_cast<Eigen::Index>(2 * i)] *
                        a[static_cast<Eigen::Index>(half - 2 * i - 1)];
    out.p += parity(i) ? -term : term;
  }
  for (std::uint64_t i = 0; i < quarter; ++i) {
    const Scalar term = a[static_cast<Eigen::Index>(half + 2 * i)] *
                        a[static_cast<Eigen::Index>(dim - 2 * i - 1)];
    out.q += parity(i) ? -term : term;
  }
  out.p += out.p;
  out.q += out.q;
  return out;
}

/// Independent evaluation through the rewritten half-range sums
///   T = sum_{i<2^(n-1)} (-1)^N(i) a_{2^(n-1)+i} a_{2^(n-1)-i-1}
///   P = sum_{i<2^(n-1)} (-1)^N(i) a_i         a_{2^(n-1)-i-1}
///   Q = sum_{i<2^(n-1)} (-1)^N(i) a_{2^(n-1)+i} a_{2^n-i-1}
/// Enumerates the pair families differently from compute_tpq (the doubling
/// is implicit: both members of each pair are visited); keeping the two
/// routes separate gives a cross-check oracle for either.
template <class Scalar>
QuantityTriple<Scalar> compute_tpq_alt(const PureState<Scalar>& state) {
  const auto& a = state.amplitudes();
  const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
  const std::uint64_t half = dim / 2;

  QuantityTriple<Scalar> out;
  for (std::uint64_t i = 0; i < half; ++i) {
    const Scalar upper = a[static_cast<Eigen::Index>(half + i)];
    const Scalar mirror = a[static_cast<Eigen::Index>(half - i - 1)];
    const Scalar t_term = upper * mirror;
    const Scalar p_term = a[static_cast<Eigen::Index>(i)] * mirror;
    const Scalar q_term = upper * a[static_cast<Eigen::Index>(dim - i - 1)];
    if (parity(i)) {
      out.t -= t_term;
      out.p -= p_term;
      out.q -= q_term;
    } else {
      out.t += t_term;
      out.p += p_term;
      out.q += q_term;
    }
  }
  return out;
}

/// The symmetric 2x2 matrix ((P, T), (T, Q)) of the quantities taken after
/// transposing qubits 1 and i; its rank is the rank of the state with
/// respect to qubit i.
template <class Scalar>
struct CoefficientMatrix {
  Eigen::Matrix<Scalar, 2, 2> m;
  int qubit = 1;
  double state_norm2 = 1.0;  // squared norm of the source state

  Scalar determinant() const { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
};

template <class Scalar>
CoefficientMatrix<Scalar> coefficient_matrix_from_triple(
    const QuantityTriple<Scalar>& tpq, int qubit, double state_norm2) {
  CoefficientMatrix<Scalar> out;
  out.m(0, 0) = tpq.p;
  out.m(0, 1) = tpq.t;
  out.m(1, 0) = tpq.t;
  out.m(1, 1) = tpq.q;
  out.qubit = qubit;
  out.state_norm2 = state_norm2;
  return out;
}

/// M^(i): the coefficient matrix of the state with qubits 1 and i exchanged.
/// i = 1 reduces to the plain matrix M.
template <class Scalar>
CoefficientMatrix<Scalar> coefficient_matrix(const PureState<Scalar>& state,
                                             int i) {
  detail::check_qubit_index(state.num_qubits(), i, "coefficient_matrix");
  const auto swapped = swap_qubits(state, 1, i);
  return coefficient_matrix_from_triple(compute_tpq(swapped), i,
                                        state.squared_norm());
}

/// Rank of a coefficient matrix: 0, 1 or 2. In float mode `boundary` warns
/// that a deciding singular value fell within a decade of the cutoff, so the
/// family assignment is numerically fragile.
struct Rank {
  int value = 0;
  bool boundary = false;

  friend bool operator==(const Rank& a, const Rank& b) {
    return a.value == b.value && a.boundary == b.boundary;
  }
};

struct SingularPair {
  double major = 0.0;
  double minor = 0.0;
};

/// Closed-form singular values of a 2x2 complex matrix, from the eigenvalues
/// of A^H A.
inline SingularPair singular_values_2x2(const Eigen::Matrix2cd& m) {
  const double frob2 = m.squaredNorm();
  const double det2 = std::norm(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  const double disc = std::sqrt(std::max(frob2 * frob2 - 4.0 * det2, 0.0));
  return {std::sqrt(std::max(0.5 * (frob2 + disc), 0.0)),
          std::sqrt(std::max(0.5 * (frob2 - disc), 0.0))};
}

/// Float mode: the matrix is rescaled by the squared state norm (entries of
/// a unit-norm state are then bounded by 1) and the rank is the count of
/// singular values above rank_epsilon.
inline Rank matrix_rank(const CoefficientMatrix<complex_t>& cm,
                        const ToleranceConfig& tol) {
  if (!(tol.rank_epsilon > 0.0)) {
    throw std::invalid_argument("rank_epsilon must be strictly positive");
  }
  const Eigen::Matrix2cd scaled = cm.m / cm.state_norm2;
  const SingularPair sv = singular_values_2x2(scaled);
  const double eps = tol.rank_epsilon;
  const auto near_cutoff = [eps](double s) {
    return s >= 0.1 * eps && s <= 10.0 * eps;
  };
  Rank r;
  r.value = (sv.major > eps ? 1 : 0) + (sv.minor > eps ? 1 : 0);
  r.boundary = near_cutoff(sv.major) || near_cutoff(sv.minor);
  return r;
}

/// Exact mode: rank 0 iff all entries vanish, rank 1 iff the matrix is
/// nonzero with PQ - T^2 = 0, rank 2 otherwise.
inline Rank matrix_rank(const CoefficientMatrix<ComplexRational>& cm,
                        const ToleranceConfig& = {}) {
  const ComplexRational& p = cm.m(0, 0);
  const ComplexRational& t = cm.m(0, 1);
  const ComplexRational& q = cm.m(1, 1);
  Rank r;
  if (is_zero(p) && is_zero(t) && is_zero(q)) {
    r.value = 0;
  } else if (is_zero(p * q - t * t)) {
    r.value = 1;
  } else {
    r.value = 2;
  }
  return r;
}

/// rank^(i): the rank of the state with respect to qubit i.
template <class Scalar>
Rank rank_wrt_qubit(const PureState<Scalar>& state, int i,
                    const ToleranceConfig& tol = {}) {
  return matrix_rank(coefficient_matrix(state, i), tol);
}

/// |det M^(i)| of the unit-norm-rescaled state. Equal to the n-tangle with
/// respect to qubit i up to an unspecified constant factor; no normalization
/// claim is made beyond the raw absolute determinant.
template <class Scalar>
double tangle_proxy(const PureState<Scalar>& state, int i) {
  const auto cm = coefficient_matrix(state, i);
  return scalar_abs_double(cm.determinant()) /
         (cm.state_norm2 * cm.state_norm2);
}

}  // namespace oddrank
