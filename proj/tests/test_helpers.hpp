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

#include <cmath>
#include <cstdint>
#include <vector>

#include "oddrank/invariants.hpp"
#include "oddrank/modes.hpp"

namespace oddrank::testing {

/// Test-only third route to the invariant triple, enumerated differently
/// from both production routes:
///   T: signed sum over the FULL index range, halved (each complement pair
///      contributes twice with consistent sign for odd n);
///   P, Q: unordered mirror pairs inside the qubit1 = 0 / qubit1 = 1 blocks
///      with an explicit doubling.
template <class Scalar>
QuantityTriple<Scalar> tpq_third_route(const PureState<Scalar>& state) {
  const auto& a = state.amplitudes();
  const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
  const std::uint64_t half = dim / 2;

  QuantityTriple<Scalar> out;
  for (std::uint64_t i = 0; i < dim; ++i) {
    const Scalar term = a[static_cast<Eigen::Index>(i)] *
                        a[static_cast<Eigen::Index>(dim - 1 - i)];
    // Sign of the lower-half member of the pair; the complement of a lower
    // index has opposite parity when n is odd.
    const bool negate = (i < half) ? (parity(i) == 1) : (parity(i) == 0);
    if (negate) {
      out.t -= term;
    } else {
      out.t += term;
    }
  }
  out.t = out.t / Scalar(2);

  for (std::uint64_t x = 0; x < half; ++x) {
    const std::uint64_t y = half - 1 - x;
    if (x > y) break;
    const Scalar twice = Scalar(2) * a[static_cast<Eigen::Index>(x)] *
                         a[static_cast<Eigen::Index>(y)];
    if (parity(x)) {
      out.p -= twice;
    } else {
      out.p += twice;
    }
  }

  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t u = half + i;
    const std::uint64_t v = dim - 1 - i;
    if (u > v) break;
    const Scalar twice = Scalar(2) * a[static_cast<Eigen::Index>(u)] *
                         a[static_cast<Eigen::Index>(v)];
    if (parity(i)) {
      out.q -= twice;
    } else {
      out.q += twice;
    }
  }
  return out;
}

inline FloatState scaled(const FloatState& s, complex_t c) {
  return FloatState(s.num_qubits(), (s.amplitudes() * c).eval());
}

inline RationalState scaled(const RationalState& s, const ComplexRational& c) {
  return RationalState(s.num_qubits(), (s.amplitudes() * c).eval());
}

inline bool exactly_equal(const RationalState& a, const RationalState& b) {
  if (a.num_qubits() != b.num_qubits()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

inline bool bit_identical(const FloatState& a, const FloatState& b) {
  if (a.num_qubits() != b.num_qubits()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real() || a[i].imag() != b[i].imag()) return false;
  }
  return true;
}

inline double max_amp_gap(const FloatState& a, const FloatState& b) {
  double gap = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    gap = std::max(gap, std::abs(a[i] - b[i]));
  }
  return gap;
}

}  // namespace oddrank::testing
