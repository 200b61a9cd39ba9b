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

#include "oddrank/bits.hpp"

#include <random>

#include "doctest.h"

using namespace oddrank;

TEST_CASE("parity of small values") {
  CHECK(parity(0) == 0);
  CHECK(parity(7) == 1);   // 111
  CHECK(parity(6) == 0);   // 110
  CHECK(parity(1) == 1);
  CHECK(parity(0b10110) == 1);
  CHECK(parity_sign(0) == 1);
  CHECK(parity_sign(7) == -1);
}

TEST_CASE("parity is additive over disjoint bit patterns") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t a = rng();
    const std::uint64_t b = rng() & ~a;
    CHECK(parity(a | b) == ((parity(a) + parity(b)) & 1));
  }
}

TEST_CASE("swap_bits basics") {
  CHECK(swap_bits(0b100, 2, 0) == 0b001);
  CHECK(swap_bits(0b101, 2, 0) == 0b101);
  CHECK(swap_bits(0b110, 1, 0) == 0b101);
  CHECK(swap_bits(42, 3, 3) == 42);
}

TEST_CASE("swap_bits is an involution") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t v = rng() & 0x7f;
    const int b1 = static_cast<int>(rng() % 7);
    const int b2 = static_cast<int>(rng() % 7);
    CHECK(swap_bits(swap_bits(v, b1, b2), b1, b2) == v);
  }
}

TEST_CASE("MSB-first qubit addressing") {
  // |100> on three qubits: qubit 1 set, qubits 2 and 3 clear.
  CHECK(qubit_bit(3, 1) == 2);
  CHECK(qubit_bit(3, 3) == 0);
  CHECK(qubit_value(0b100, 3, 1) == 1);
  CHECK(qubit_value(0b100, 3, 2) == 0);
  CHECK(qubit_value(0b100, 3, 3) == 0);
  CHECK(qubit_value(0b00110, 5, 3) == 1);
  CHECK(qubit_value(0b00110, 5, 4) == 1);
  CHECK(qubit_value(0b00110, 5, 5) == 0);
}
