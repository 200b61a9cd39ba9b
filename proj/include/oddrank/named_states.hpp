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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddrank/modes.hpp"

namespace oddrank {

/// One ket of a named superposition: integer coefficient on a basis index.
struct BasisTerm {
  std::uint64_t index;
  int coeff;
};

namespace detail {

inline std::optional<std::uint64_t> integer_sqrt(std::uint64_t v) {
  const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(
      static_cast<double>(v))));
  return r * r == v ? std::optional<std::uint64_t>(r) : std::nullopt;
}

}  // namespace detail

/// Builds the superposition sum_k coeff_k |index_k> from small integer
/// coefficients. Float mode emits the unit-norm state. Rational mode keeps
/// the normalization prefactor only when it is itself rational (sum of
/// squared coefficients a perfect square) and otherwise drops it, leaving
/// integer amplitudes; every rank downstream is scale-invariant.
template <class Scalar>
PureState<Scalar> state_from_terms(int n, std::span<const BasisTerm> terms) {
  using Vector = typename PureState<Scalar>::Vector;
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  std::uint64_t sum_sq = 0;
  for (const auto& term : terms) {
    v[static_cast<Eigen::Index>(term.index)] += Scalar(term.coeff);
    sum_sq += static_cast<std::uint64_t>(term.coeff) *
              static_cast<std::uint64_t>(term.coeff);
  }
  if constexpr (std::is_same_v<Scalar, ComplexRational>) {
    if (const auto root = detail::integer_sqrt(sum_sq); root && *root > 1) {
      const ComplexRational prefactor{rational_t(1, *root)};
      for (Eigen::Index i = 0; i < v.size(); ++i) v[i] *= prefactor;
    }
    return PureState<Scalar>(n, std::move(v));
  } else {
    v /= std::sqrt(static_cast<double>(sum_sq));
    return PureState<Scalar>(n, std::move(v));
  }
}

/// (|0...0> + |1...1>) / sqrt(2)
template <class Scalar>
PureState<Scalar> ghz_state(int n) {
  const BasisTerm terms[] = {{0, 1}, {(std::uint64_t{1} << n) - 1, 1}};
  return state_from_terms<Scalar>(n, terms);
}

/// Dicke state |l,n>: equal superposition of all C(n,l) basis states with
/// exactly l ones.
template <class Scalar>
PureState<Scalar> dicke_state(int n, int l) {
  if (l < 1 || l > n - 1) {
    throw std::invalid_argument("Dicke excitation l must satisfy 1 <= l <= n-1");
  }
  std::vector<BasisTerm> terms;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    if (std::popcount(i) == l) terms.push_back({i, 1});
  }
  return state_from_terms<Scalar>(n, terms);
}

/// |W> = |1,n>
template <class Scalar>
PureState<Scalar> w_state(int n) {
  return dicke_state<Scalar>(n, 1);
}

/// The six three-qubit SLOCC classes. The biseparable representatives are
/// the canonical choices |0>(|00>+|11>), (|0.0>+|1.1>)(x)|0> and
/// (|00>+|11>)|0>; the fully separable class is |000>.
enum class ThreeQubitClass { kGhz, kW, kABc, kBAc, kCAb, kFullySeparable };

template <class Scalar>
PureState<Scalar> three_qubit_class_state(ThreeQubitClass cls) {
  switch (cls) {
    case ThreeQubitClass::kGhz:
      return ghz_state<Scalar>(3);
    case ThreeQubitClass::kW:
      return w_state<Scalar>(3);
    case ThreeQubitClass::kABc: {
      const BasisTerm t[] = {{0b000, 1}, {0b011, 1}};
      return state_from_terms<Scalar>(3, t);
    }
    case ThreeQubitClass::kBAc: {
      const BasisTerm t[] = {{0b000, 1}, {0b101, 1}};
      return state_from_terms<Scalar>(3, t);
    }
    case ThreeQubitClass::kCAb: {
      const BasisTerm t[] = {{0b000, 1}, {0b110, 1}};
      return state_from_terms<Scalar>(3, t);
    }
    case ThreeQubitClass::kFullySeparable:
      return PureState<Scalar>::basis(3, 0);
  }
  throw std::invalid_argument("unknown three-qubit class");
}

/// |Phi2> = (|11111> + |11100> + |00010> + |00001>) / 2
template <class Scalar>
PureState<Scalar> phi2_state() {
  const BasisTerm t[] = {{31, 1}, {28, 1}, {2, 1}, {1, 1}};
  return state_from_terms<Scalar>(5, t);
}

/// |Phi3> = (sqrt(2)|11111> + |11000> + |00100> + |00010> + |00001>) / sqrt(6)
/// Irrational coefficients; float only.
inline FloatState phi3_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(32);
  const double unit = 1.0 / std::sqrt(6.0);
  v[31] = std::sqrt(2.0) * unit;
  v[24] = v[4] = v[2] = v[1] = unit;
  return FloatState(5, std::move(v));
}

/// |Phi4> = (sqrt(3)|11111> + |10000> + |01000> + |00100> + |00010> +
///           |00001>) / (2 sqrt(2)). Irrational coefficients; float only.
inline FloatState phi4_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(32);
  const double unit = 1.0 / (2.0 * std::sqrt(2.0));
  v[31] = std::sqrt(3.0) * unit;
  v[16] = v[8] = v[4] = v[2] = v[1] = unit;
  return FloatState(5, std::move(v));
}

/// Representative of the five-qubit family with rank pair (r1, r2) with
/// respect to qubits 1 and 2.
template <class Scalar>
PureState<Scalar> table5_representative(int r1, int r2) {
  const auto build = [](std::span<const BasisTerm> t) {
    return state_from_terms<Scalar>(5, t);
  };
  if (r1 == 2 && r2 == 2) return ghz_state<Scalar>(5);
  if (r1 == 2 && r2 == 1) {
    const BasisTerm t[] = {{0, 1}, {31, 1}, {0b01010, 1},
                           {0b10101, 1}, {0b00110, 1}, {0b10001, -1}};
    return build(t);
  }
  if (r1 == 2 && r2 == 0) {
    const BasisTerm t[] = {{0, 1}, {31, 1}, {0b01010, 1}, {0b10101, 1}};
    return build(t);
  }
  if (r1 == 1 && r2 == 2) {
    const BasisTerm t[] = {{0b00111, 1}, {0b01000, -1}, {0b01100, 1},
                           {0b10000, 1}, {0b11011, 1}};
    return build(t);
  }
  if (r1 == 1 && r2 == 1) return dicke_state<Scalar>(5, 2);
  if (r1 == 1 && r2 == 0) {
    const BasisTerm t[] = {{0b00000, 1}, {0b01111, 1}};
    return build(t);
  }
  if (r1 == 0 && r2 == 2) {
    const BasisTerm t[] = {{0, 1}, {31, 1}, {0b01001, 1}, {0b10110, -1}};
    return build(t);
  }
  if (r1 == 0 && r2 == 1) {
    const BasisTerm t[] = {{0b00000, 1}, {0b10111, 1}};
    return build(t);
  }
  if (r1 == 0 && r2 == 0) return PureState<Scalar>::basis(5, 0);
  throw std::invalid_argument("table5 rank pair must be in {0,1,2}x{0,1,2}");
}

/// Tensor product of two registers interleaved into an n-qubit state.
/// `part_a` lists the qubits (1-based) carrying `amps_a`, in the order that
/// defines the MSB-first index of `amps_a`; the remaining qubits carry
/// `amps_b` in ascending order. a[i] = amps_a[i_A] * amps_b[i_B].
template <class Scalar>
PureState<Scalar> assemble_product(
    int n, const std::vector<int>& part_a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& amps_a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& amps_b) {
  std::vector<int> part_b;
  for (int q = 1; q <= n; ++q) {
    if (std::find(part_a.begin(), part_a.end(), q) == part_a.end()) {
      part_b.push_back(q);
    }
  }
  if (part_a.empty() || part_b.empty() ||
      part_a.size() + part_b.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("assemble_product: invalid bipartition");
  }
  for (int q : part_a) detail::check_qubit_index(n, q, "assemble_product");
  if (amps_a.size() != (Eigen::Index{1} << part_a.size()) ||
      amps_b.size() != (Eigen::Index{1} << part_b.size())) {
    throw std::invalid_argument("assemble_product: factor size mismatch");
  }

  const auto extract = [n](std::uint64_t idx, const std::vector<int>& qs) {
    std::uint64_t sub = 0;
    for (int q : qs) sub = (sub << 1) | qubit_value(idx, n, q);
    return sub;
  };
  typename PureState<Scalar>::Vector v(Eigen::Index{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    v[static_cast<Eigen::Index>(i)] =
        amps_a[static_cast<Eigen::Index>(extract(i, part_a))] *
        amps_b[static_cast<Eigen::Index>(extract(i, part_b))];
  }
  return PureState<Scalar>(n, std::move(v));
}

/// Registry of every state the tables and examples refer to by name.
/// Recognized names (case-insensitive): GHZ, W, Dicke (with l), zero,
/// basis:<bits>, Phi1..Phi4, table5:<r1><r2>, A-BC, B-AC, C-AB, A-B-C.
/// Mode kAuto picks rational whenever the amplitudes permit it; Phi3 and
/// Phi4 carry irrational coefficients and are float-only.
AnyState make_named_state(const std::string& name, std::optional<int> n,
                          std::optional<int> l,
                          NumericMode mode = NumericMode::kAuto);

/// Names accepted by make_named_state, for diagnostics.
std::vector<std::string> named_state_catalog();

}  // namespace oddrank
