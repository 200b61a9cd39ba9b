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
#include <complex>

namespace oddrank {

/// Floating-point amplitude scalar. The exact counterpart is
/// ComplexRational (rational.hpp); core algorithms are templated on the
/// scalar and work with either.
using complex_t = std::complex<double>;

inline bool is_zero(const complex_t& z) noexcept {
  return z.real() == 0.0 && z.imag() == 0.0;
}

inline double scalar_abs2_double(const complex_t& z) noexcept {
  return std::norm(z);
}

inline double scalar_abs_double(const complex_t& z) noexcept {
  return std::abs(z);
}

inline complex_t to_complex(const complex_t& z) noexcept { return z; }

}  // namespace oddrank
