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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddrank/bits.hpp"
#include "oddrank/scalars.hpp"

namespace oddrank {

/// Pure state of an odd number n >= 3 of qubits, stored as the dense
/// amplitude vector a_0 ... a_{2^n-1}.
///
/// Basis index i encodes |q1 q2 ... qn> with qubit 1 as the most significant
/// bit of i. States need not be normalized: every rank computed downstream is
/// invariant under global rescaling.
///
/// Immutable after construction; all operations on states are pure functions
/// returning new values, so concurrent use needs no synchronization.
template <class Scalar>
class PureState {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  PureState(int num_qubits, Vector amplitudes)
      : n_(num_qubits), amps_(std::move(amplitudes)) {
    if (n_ < 3 || n_ % 2 == 0) {
      throw std::invalid_argument(
          "PureState requires an odd qubit count n >= 3, got n = " +
          std::to_string(n_));
    }
    if (n_ > 30) {
      throw std::invalid_argument("PureState supports at most 30 qubits");
    }
    const auto expected = Eigen::Index{1} << n_;
    if (amps_.size() != expected) {
      throw std::invalid_argument(
          "amplitude vector must have length 2^n = " +
          std::to_string(expected) + ", got " + std::to_string(amps_.size()));
    }
    bool nonzero = false;
    for (Eigen::Index i = 0; i < amps_.size() && !nonzero; ++i) {
      nonzero = !is_zero(amps_[i]);
    }
    if (!nonzero) {
      throw std::invalid_argument("state must have a nonzero amplitude");
    }
  }

  /// Computational basis state |index> (MSB-first qubit order).
  static PureState basis(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > 30 ||
        index >= (std::uint64_t{1} << num_qubits)) {
      throw std::invalid_argument("basis index out of range");
    }
    Vector v = Vector::Zero(Eigen::Index{1} << num_qubits);
    v[static_cast<Eigen::Index>(index)] = Scalar(1);
    return PureState(num_qubits, std::move(v));
  }

  int num_qubits() const noexcept { return n_; }
  Eigen::Index size() const noexcept { return amps_.size(); }
  const Vector& amplitudes() const noexcept { return amps_; }
  const Scalar& operator[](Eigen::Index i) const { return amps_[i]; }

  /// Squared Euclidean norm, as a double (exact-mode states are converted
  /// after the exact accumulation).
  double squared_norm() const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
      acc += scalar_abs2_double(amps_[i]);
    }
    return acc;
  }

 private:
  int n_;
  Vector amps_;
};

/// One invertible 2x2 operator acting on a single qubit.
template <class Scalar>
class LocalOperator {
 public:
  using Matrix = Eigen::Matrix<Scalar, 2, 2>;

  explicit LocalOperator(Matrix m) : m_(std::move(m)) {
    if (is_zero(determinant())) {
      throw std::invalid_argument("local operator must be invertible");
    }
  }

  LocalOperator(Scalar a, Scalar b, Scalar c, Scalar d)
      : LocalOperator(make(std::move(a), std::move(b), std::move(c),
                           std::move(d))) {}

  static LocalOperator identity() {
    return LocalOperator(Scalar(1), Scalar(0), Scalar(0), Scalar(1));
  }

  const Matrix& matrix() const noexcept { return m_; }

  Scalar determinant() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }

  LocalOperator inverse() const {
    const Scalar d = determinant();
    return LocalOperator(m_(1, 1) / d, -m_(0, 1) / d, -m_(1, 0) / d,
                         m_(0, 0) / d);
  }

 private:
  static Matrix make(Scalar a, Scalar b, Scalar c, Scalar d) {
    Matrix m;
    m(0, 0) = std::move(a);
    m(0, 1) = std::move(b);
    m(1, 0) = std::move(c);
    m(1, 1) = std::move(d);
    return m;
  }

  Matrix m_;
};

/// One local operator per qubit, ordered qubit 1 ... qubit n.
template <class Scalar>
using SloccMap = std::vector<LocalOperator<Scalar>>;

template <class Scalar>
SloccMap<Scalar> identity_map(int n) {
  return SloccMap<Scalar>(static_cast<std::size_t>(n),
                          LocalOperator<Scalar>::identity());
}

namespace detail {
inline void check_qubit_index(int n, int q, const char* what) {
  if (q < 1 || q > n) {
    throw std::out_of_range(std::string(what) + ": qubit index " +
                            std::to_string(q) + " out of range 1.." +
                            std::to_string(n));
  }
}
}  // namespace detail

/// State after exchanging qubits p and q: the amplitude at index j is the
/// input amplitude at the index with the two bit positions swapped. A pure
/// index permutation, exact in every numeric mode; p == q copies the state.
template <class Scalar>
PureState<Scalar> swap_qubits(const PureState<Scalar>& state, int p, int q) {
  const int n = state.num_qubits();
  detail::check_qubit_index(n, p, "swap_qubits");
  detail::check_qubit_index(n, q, "swap_qubits");
  const int bp = qubit_bit(n, p);
  const int bq = qubit_bit(n, q);
  typename PureState<Scalar>::Vector out(state.size());
  for (Eigen::Index j = 0; j < state.size(); ++j) {
    out[j] = state[static_cast<Eigen::Index>(
        swap_bits(static_cast<std::uint64_t>(j), bp, bq))];
  }
  return PureState<Scalar>(n, std::move(out));
}

/// Applies a single-qubit operator A on qubit k: amplitudes transform in
/// pairs over the indices that differ only in the bit of qubit k,
///   a'_{i0} = A00 a_{i0} + A01 a_{i1},   a'_{i1} = A10 a_{i0} + A11 a_{i1}.
template <class Scalar>
PureState<Scalar> apply_local_operator(const PureState<Scalar>& state, int k,
                                       const LocalOperator<Scalar>& op) {
  const int n = state.num_qubits();
  detail::check_qubit_index(n, k, "apply_local_operator");
  const std::uint64_t stride = std::uint64_t{1} << qubit_bit(n, k);
  const auto& in = state.amplitudes();
  const auto& m = op.matrix();
  typename PureState<Scalar>::Vector out(state.size());
  for (std::uint64_t i0 = 0; i0 < static_cast<std::uint64_t>(state.size());
       ++i0) {
    if (i0 & stride) continue;
    const auto lo = static_cast<Eigen::Index>(i0);
    const auto hi = static_cast<Eigen::Index>(i0 | stride);
    out[lo] = m(0, 0) * in[lo] + m(0, 1) * in[hi];
    out[hi] = m(1, 0) * in[lo] + m(1, 1) * in[hi];
  }
  return PureState<Scalar>(n, std::move(out));
}

/// Applies the full tensor product A1 (x) A2 (x) ... (x) An. The per-qubit
/// factors act on disjoint qubits, so the application order is irrelevant.
template <class Scalar>
PureState<Scalar> apply_slocc(const PureState<Scalar>& state,
                              const SloccMap<Scalar>& map) {
  const int n = state.num_qubits();
  if (static_cast<int>(map.size()) != n) {
    throw std::invalid_argument(
        "apply_slocc: map has " + std::to_string(map.size()) +
        " operators for an n = " + std::to_string(n) + " state");
  }
  PureState<Scalar> out = state;
  for (int k = 1; k <= n; ++k) {
    out = apply_local_operator(out, k, map[static_cast<std::size_t>(k - 1)]);
  }
  return out;
}

}  // namespace oddrank
