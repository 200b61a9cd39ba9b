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
#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>
#include <utility>

#include "oddrank/scalars.hpp"

namespace oddrank {

using rational_t = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
///
/// The invariant sums and the local-operator action are polynomial in the
/// amplitudes, so states with rational amplitudes stay rational under every
/// operation in this library; zero tests and rank decisions are then exact.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(int value) : re_(value) {}  // NOLINT: Scalar(0), Scalar(1)
  ComplexRational(rational_t re) : re_(std::move(re)) {}
  ComplexRational(rational_t re, rational_t im)
      : re_(std::move(re)), im_(std::move(im)) {}

  const rational_t& real() const noexcept { return re_; }
  const rational_t& imag() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ComplexRational operator-() const { return {-re_, -im_}; }

  friend ComplexRational operator+(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexRational operator-(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexRational operator*(const ComplexRational& a,
                                   const ComplexRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ComplexRational operator/(const ComplexRational& a,
                                   const ComplexRational& b) {
    const rational_t d = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d,
            (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }

  ComplexRational& operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
    return !(a == b);
  }

 private:
  rational_t re_;
  rational_t im_;
};

inline ComplexRational conj(const ComplexRational& z) {
  return {z.real(), -z.imag()};
}

inline rational_t abs2(const ComplexRational& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

inline bool is_zero(const ComplexRational& z) { return z.is_zero(); }

inline double scalar_abs2_double(const ComplexRational& z) {
  return static_cast<double>(abs2(z));
}

inline double scalar_abs_double(const ComplexRational& z) {
  return std::sqrt(scalar_abs2_double(z));
}

inline complex_t to_complex(const ComplexRational& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Prints "a", "bi" or "a+bi" with rational components in p/q form.
inline std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
  if (z.imag().is_zero()) return os << z.real();
  if (z.real().is_zero()) return os << z.imag() << "i";
  os << z.real();
  if (z.imag() > 0) os << '+';
  return os << z.imag() << "i";
}

}  // namespace oddrank

namespace Eigen {

template <>
struct NumTraits<oddrank::ComplexRational>
    : GenericNumTraits<oddrank::ComplexRational> {
  using Real = oddrank::ComplexRational;
  using NonInteger = oddrank::ComplexRational;
  using Literal = oddrank::ComplexRational;
  using Nested = oddrank::ComplexRational;

  enum {
    // Treated as a plain commutative field: products must never conjugate,
    // the invariants are bilinear rather than sesquilinear.
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
