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

#include <iosfwd>
#include <string>

#include "oddrank/modes.hpp"

namespace oddrank {

/// State files are JSON documents:
///   {
///     "format": "oddrank-state",
///     "convention": "qubit1=MSB",
///     "mode": "float" | "rational",
///     "n": 5,
///     "amplitudes": [[re, im], ...]   // 2^n [real, imaginary] pairs
///   }
/// Float entries are JSON numbers and round-trip bit-identically; rational
/// entries are "p/q" strings and round-trip exactly.
AnyState read_state(std::istream& in);
AnyState read_state_file(const std::string& path);

void write_state(std::ostream& out, const AnyState& state);
void write_state_file(const std::string& path, const AnyState& state);

std::string state_format_name();

}  // namespace oddrank
