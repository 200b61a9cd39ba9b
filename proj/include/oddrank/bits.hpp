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

#include <bit>
#include <cstdint>

namespace oddrank {

/// Parity of the number of set bits of i. The alternating sign that weights
/// the invariant sums is (-1)^parity(i).
constexpr int parity(std::uint64_t i) noexcept {
  return std::popcount(i) & 1;
}

constexpr int parity_sign(std::uint64_t i) noexcept {
  return parity(i) ? -1 : 1;
}

/// Exchanges bit positions b1 and b2 of v (position 0 = least significant).
constexpr std::uint64_t swap_bits(std::uint64_t v, int b1, int b2) noexcept {
  const std::uint64_t x = ((v >> b1) ^ (v >> b2)) & 1u;
  return v ^ ((x << b1) | (x << b2));
}

/// Bit position of qubit q inside an n-qubit basis index.
/// Qubit 1 is the most significant bit: |q1 q2 ... qn>.
constexpr int qubit_bit(int n, int q) noexcept { return n - q; }

/// Value (0 or 1) of qubit q in basis index idx, MSB-first convention.
constexpr int qubit_value(std::uint64_t idx, int n, int q) noexcept {
  return static_cast<int>((idx >> qubit_bit(n, q)) & 1u);
}

}  // namespace oddrank
