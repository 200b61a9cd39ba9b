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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oddrank/invariants.hpp"

namespace oddrank {

/// Ordered rank list over a set of qubits. The signature over qubits 1..k
/// places a state in exactly one of the 3^k SLOCC families; two states are
/// in the same family iff their signatures agree. `boundary` marks entries
/// whose deciding singular value fell near the float cutoff.
struct FamilySignature {
  std::vector<int> qubits;
  std::vector<int> ranks;
  std::vector<bool> boundary;

  bool any_boundary() const {
    for (bool b : boundary) {
      if (b) return true;
    }
    return false;
  }

  friend bool operator==(const FamilySignature& a, const FamilySignature& b) {
    return a.qubits == b.qubits && a.ranks == b.ranks;
  }
};

/// Ranks with respect to qubits 1..k.
template <class Scalar>
FamilySignature family_signature(const PureState<Scalar>& state, int k,
                                 const ToleranceConfig& tol = {}) {
  detail::check_qubit_index(state.num_qubits(), k, "family_signature");
  FamilySignature sig;
  for (int q = 1; q <= k; ++q) {
    const Rank r = rank_wrt_qubit(state, q, tol);
    sig.qubits.push_back(q);
    sig.ranks.push_back(r.value);
    sig.boundary.push_back(r.boundary);
  }
  return sig;
}

/// Plain-text family symbol, e.g. "F[2,1]^(1,2)".
inline std::string family_label(const FamilySignature& sig) {
  std::ostringstream os;
  os << "F[";
  for (std::size_t i = 0; i < sig.ranks.size(); ++i) {
    if (i) os << ',';
    os << sig.ranks[i];
  }
  os << "]^(";
  for (std::size_t i = 0; i < sig.qubits.size(); ++i) {
    if (i) os << ',';
    os << sig.qubits[i];
  }
  os << ')';
  return os.str();
}

/// Whether two states lie in the same family over qubits 1..k. Returns
/// nullopt when either signature carries a boundary warning: membership at a
/// numerical threshold is not asserted either way. The two states may use
/// different numeric modes.
template <class ScalarA, class ScalarB>
std::optional<bool> same_family(const PureState<ScalarA>& a,
                                const PureState<ScalarB>& b, int k,
                                const ToleranceConfig& tol = {}) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("same_family: qubit counts differ");
  }
  const FamilySignature sa = family_signature(a, k, tol);
  const FamilySignature sb = family_signature(b, k, tol);
  if (sa.any_boundary() || sb.any_boundary()) return std::nullopt;
  return sa.ranks == sb.ranks;
}

/// The one-directional entanglement statements the ranks support:
/// all ranks equal to 2 is sufficient for genuine entanglement, and a
/// biseparable state necessarily has some rank in {0, 1}. Nothing is
/// claimed when the sufficient condition fails (W3 is genuinely entangled
/// with all ranks 1).
struct EntanglementVerdict {
  bool genuinely_entangled_sufficient = false;
  bool biseparable_necessary_met = false;
  bool any_boundary = false;
};

template <class Scalar>
EntanglementVerdict entanglement_verdict(const PureState<Scalar>& state,
                                         const ToleranceConfig& tol = {}) {
  const FamilySignature sig =
      family_signature(state, state.num_qubits(), tol);
  EntanglementVerdict v;
  v.any_boundary = sig.any_boundary();
  bool all_two = true;
  bool some_low = false;
  for (int r : sig.ranks) {
    all_two = all_two && r == 2;
    some_low = some_low || r <= 1;
  }
  v.genuinely_entangled_sufficient = all_two;
  v.biseparable_necessary_met = some_low;
  return v;
}

}  // namespace oddrank
