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

#include <string>
#include <variant>

#include "oddrank/rational.hpp"
#include "oddrank/state.hpp"

namespace oddrank {

using FloatState = PureState<complex_t>;
using RationalState = PureState<ComplexRational>;

/// Runtime-selected numeric mode. Rational amplitudes give exact zero tests
/// and exact ranks; float is used for random sampling and for states with
/// irrational coefficients. Mixing modes promotes to float.
enum class NumericMode { kAuto, kFloat, kRational };

using AnyState = std::variant<FloatState, RationalState>;

inline FloatState to_float(const RationalState& s) {
  Eigen::VectorXcd v(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) v[i] = to_complex(s[i]);
  return FloatState(s.num_qubits(), std::move(v));
}

inline FloatState to_float(const FloatState& s) { return s; }

inline FloatState to_float(const AnyState& s) {
  return std::visit([](const auto& st) { return to_float(st); }, s);
}

inline LocalOperator<complex_t> to_float(
    const LocalOperator<ComplexRational>& op) {
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = to_complex(op.matrix()(r, c));
  return LocalOperator<complex_t>(std::move(m));
}

inline SloccMap<complex_t> to_float(const SloccMap<ComplexRational>& map) {
  SloccMap<complex_t> out;
  out.reserve(map.size());
  for (const auto& op : map) out.push_back(to_float(op));
  return out;
}

inline int num_qubits(const AnyState& s) {
  return std::visit([](const auto& st) { return st.num_qubits(); }, s);
}

inline bool is_rational(const AnyState& s) {
  return std::holds_alternative<RationalState>(s);
}

inline std::string mode_name(const AnyState& s) {
  return is_rational(s) ? "rational" : "float";
}

}  // namespace oddrank
