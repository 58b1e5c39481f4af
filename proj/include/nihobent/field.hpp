// Copyright 2026 The nihobent Authors.
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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nihobent/error.hpp"

namespace nihobent {

// Bit-packed element of GF(2^k) in the polynomial basis 1, X, ..., X^{k-1}.
using Elem = std::uint32_t;

inline constexpr int kMaxDegree = 24;

// True iff `poly` (bit i = coefficient of X^i) is irreducible over GF(2).
// Exhaustive trial division by every polynomial of degree <= deg/2.
bool is_irreducible(std::uint64_t poly);

// Smallest irreducible polynomial of degree k with nonzero constant term.
std::uint32_t default_modulus(int k);

std::string to_hex(std::uint64_t bits);

// GF(2^k) given by a reduction polynomial, with a cached primitive element
// and trace data. Immutable and cheap to copy (shared representation).
class Field {
 public:
  // GF(2).
  Field() : Field(1) {}
  explicit Field(int degree);
  Field(int degree, std::uint32_t modulus);

  int degree() const { return impl_->degree; }
  std::uint32_t modulus() const { return impl_->modulus; }
  Elem generator() const { return impl_->generator; }
  std::uint32_t size() const { return std::uint32_t{1} << impl_->degree; }
  std::uint64_t group_order() const { return size() - 1; }
  bool contains(Elem x) const { return x < size(); }

  Elem add(Elem x, Elem y) const { return x ^ y; }
  Elem mul(Elem x, Elem y) const;
  Elem square(Elem x) const { return mul(x, x); }
  // x^e; for x != 0 the exponent is reduced mod 2^k - 1. pow(0, 0) = 1.
  Elem pow(Elem x, std::uint64_t e) const;
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem sqrt(Elem x) const { return frobenius(x, degree() - 1); }
  // x^{2^times}
  Elem frobenius(Elem x, int times) const;

  int abs_trace(Elem x) const;
  // sum_{i < k/r} x^{2^{ir}}; lands in the subfield of size 2^r.
  Elem rel_trace(Elem x, int r) const;
  bool in_subfield(Elem x, int r) const;
  // Absolute trace of the subfield GF(2^r) applied to x, which must lie in it.
  int subfield_trace(Elem x, int r) const;

  std::uint64_t order(Elem x) const;

  // dual[j] satisfies abs_trace(X^i * dual[j]) = [i == j].
  std::span<const Elem> trace_dual_basis() const { return impl_->dual_basis; }
  // Bit i is abs_trace(X^i); abs_trace(x) = parity(x & mask).
  std::uint32_t trace_mask() const { return impl_->trace_mask; }

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.degree() == b.degree() && a.modulus() == b.modulus();
  }

 private:
  struct Impl {
    int degree = 0;
    std::uint32_t modulus = 0;
    Elem generator = 0;
    std::uint32_t trace_mask = 0;
    std::vector<Elem> dual_basis;
    std::vector<std::uint64_t> order_prime_factors;
  };

  void check_divisor(int r) const;

  std::shared_ptr<const Impl> impl_;
};

// An element tied to its field. Mixing fields raises kFieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Elem bits);

  Elem bits() const { return bits_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return bits_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

 private:
  Field field_;
  Elem bits_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement inv(const FieldElement& x);
FieldElement pow(const FieldElement& x, std::uint64_t e);
FieldElement sqrt(const FieldElement& x);
int abs_trace(const FieldElement& x);
FieldElement rel_trace(const FieldElement& x, int r);
bool in_subfield(const FieldElement& x, int r);

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  return add(x, y);
}
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  return mul(x, y);
}

// Choice of u on the unit circle {x : x^{2^m+1} = 1} of GF(2^{2m}).
struct UnitCircleCase {
  enum class Kind { kCube, kFifth, kGeneral };
  Kind kind = Kind::kCube;
  int index = 0;  // j in 1..4 for kFifth, i >= 0 for kGeneral

  static UnitCircleCase cube() { return {Kind::kCube, 0}; }
  static UnitCircleCase fifth(int j) { return {Kind::kFifth, j}; }
  static UnitCircleCase general(int i) { return {Kind::kGeneral, i}; }

  std::string to_string() const;
  // Accepts "cube", "fifth:j", "general:i".
  static UnitCircleCase parse(const std::string& text);
};

Elem unit_circle_element(const Field& field, UnitCircleCase which);

// Elements of the unit circle other than 1, in bitmask order.
std::vector<Elem> unit_circle(const Field& field);

// Elements of the GF(2^r) subfield of `field`, in bitmask order.
std::vector<Elem> subfield_elements(const Field& field, int r);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace nihobent
