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

#include "nihobent/field.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>

namespace nihobent {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFieldMismatch: return "field_mismatch";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kOutOfRange: return "out_of_range";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kNotNihoExponent: return "not_niho_exponent";
    case ErrorKind::kParity: return "parity";
    case ErrorKind::kZeroCoefficient: return "zero_coefficient";
    case ErrorKind::kCoefficientRelation: return "coefficient_relation";
    case ErrorKind::kNotInSubfield: return "not_in_subfield";
    case ErrorKind::kNotFifthPower: return "not_fifth_power";
    case ErrorKind::kInvalidR: return "invalid_r";
    case ErrorKind::kTraceCondition: return "trace_condition";
    case ErrorKind::kBasisDependent: return "basis_dependent";
    case ErrorKind::kNotClassH: return "not_class_h";
    case ErrorKind::kInvalidParams: return "invalid_params";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = poly_degree(p);
  while (a != 0 && poly_degree(a) >= dp) a ^= p << (poly_degree(a) - dp);
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
  if (poly < 2) return false;
  const int k = poly_degree(poly);
  if (k == 1) return true;
  if ((poly & 1) == 0) return false;
  for (std::uint64_t q = 2; poly_degree(q) <= k / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(int k) {
  if (k < 1 || k > kMaxDegree) {
    fail(ErrorKind::kOutOfRange, "field degree must be in [1, 24], got " +
                                     std::to_string(k));
  }
  for (std::uint64_t p = (std::uint64_t{1} << k) | 1;
       p < (std::uint64_t{1} << (k + 1)); p += 2) {
    if (is_irreducible(p)) return static_cast<std::uint32_t>(p);
  }
  fail(ErrorKind::kInternal, "no irreducible polynomial found");
}

std::string to_hex(std::uint64_t bits) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx",
                static_cast<unsigned long long>(bits));
  return buf;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

Field::Field(int degree) : Field(degree, default_modulus(degree)) {}

Field::Field(int degree, std::uint32_t modulus) {
  if (degree < 1 || degree > kMaxDegree) {
    fail(ErrorKind::kOutOfRange, "field degree must be in [1, 24], got " +
                                     std::to_string(degree));
  }
  if (poly_degree(modulus) != degree || !is_irreducible(modulus) ||
      (modulus & 1) == 0) {
    fail(ErrorKind::kInvalidArgument,
         "modulus " + to_hex(modulus) + " is not an irreducible polynomial of "
         "degree " + std::to_string(degree));
  }
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->modulus = modulus;
  impl->order_prime_factors = prime_factors((std::uint64_t{1} << degree) - 1);
  impl_ = impl;

  for (int i = 0; i < degree; ++i) {
    Elem x = Elem{1} << i;
    Elem t = 0;
    for (int j = 0; j < degree; ++j) {
      t ^= x;
      x = mul(x, x);
    }
    if (t > 1) fail(ErrorKind::kInternal, "trace left the prime field");
    impl->trace_mask |= t << i;
  }

  // Invert the Gram matrix G_ij = tr(X^i X^j); rows of the inverse are the
  // dual basis coordinates (G is symmetric).
  std::vector<std::uint32_t> gram(degree), inverse(degree);
  for (int i = 0; i < degree; ++i) {
    for (int j = 0; j < degree; ++j) {
      gram[i] |= static_cast<std::uint32_t>(
                     abs_trace(mul(Elem{1} << i, Elem{1} << j)))
                 << j;
    }
    inverse[i] = std::uint32_t{1} << i;
  }
  for (int col = 0; col < degree; ++col) {
    int pivot = col;
    while (pivot < degree && ((gram[pivot] >> col) & 1) == 0) ++pivot;
    if (pivot == degree) fail(ErrorKind::kInternal, "trace form degenerate");
    std::swap(gram[col], gram[pivot]);
    std::swap(inverse[col], inverse[pivot]);
    for (int row = 0; row < degree; ++row) {
      if (row != col && ((gram[row] >> col) & 1)) {
        gram[row] ^= gram[col];
        inverse[row] ^= inverse[col];
      }
    }
  }
  impl->dual_basis = inverse;

  const std::uint64_t n = group_order();
  for (Elem g = 1; g < size(); ++g) {
    bool primitive = true;
    for (std::uint64_t p : impl->order_prime_factors) {
      if (pow(g, n / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      impl->generator = g;
      break;
    }
  }
}

Elem Field::mul(Elem x, Elem y) const {
  const int k = impl_->degree;
  std::uint64_t a = x;
  std::uint64_t r = 0;
  while (y != 0) {
    if (y & 1) r ^= a;
    y >>= 1;
    a <<= 1;
  }
  const std::uint64_t mod = impl_->modulus;
  for (int i = 2 * k - 2; i >= k; --i) {
    if ((r >> i) & 1) r ^= mod << (i - k);
  }
  return static_cast<Elem>(r);
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  e %= group_order();
  Elem result = 1;
  Elem base = x;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem x) const {
  if (x == 0) fail(ErrorKind::kDomain, "inverse of zero");
  return pow(x, group_order() - 1);
}

Elem Field::frobenius(Elem x, int times) const {
  for (int i = 0; i < times; ++i) x = mul(x, x);
  return x;
}

int Field::abs_trace(Elem x) const {
  return std::popcount(x & impl_->trace_mask) & 1;
}

void Field::check_divisor(int r) const {
  if (r < 1 || degree() % r != 0) {
    fail(ErrorKind::kInvalidArgument, std::to_string(r) +
                                          " does not divide the degree " +
                                          std::to_string(degree()));
  }
}

Elem Field::rel_trace(Elem x, int r) const {
  check_divisor(r);
  Elem sum = 0;
  for (int i = 0; i < degree() / r; ++i) {
    sum ^= x;
    x = frobenius(x, r);
  }
  return sum;
}

bool Field::in_subfield(Elem x, int r) const {
  check_divisor(r);
  return frobenius(x, r) == x;
}

int Field::subfield_trace(Elem x, int r) const {
  if (!in_subfield(x, r)) {
    fail(ErrorKind::kNotInSubfield,
         to_hex(x) + " is not in the subfield of degree " + std::to_string(r));
  }
  Elem sum = 0;
  for (int i = 0; i < r; ++i) {
    sum ^= x;
    x = mul(x, x);
  }
  return static_cast<int>(sum);
}

std::uint64_t Field::order(Elem x) const {
  if (x == 0) fail(ErrorKind::kDomain, "order of zero");
  std::uint64_t d = group_order();
  for (std::uint64_t p : impl_->order_prime_factors) {
    while (d % p == 0 && pow(x, d / p) == 1) d /= p;
  }
  return d;
}

std::string Field::describe() const {
  return "{degree: " + std::to_string(degree()) + ", modulus: " +
         to_hex(modulus()) + ", generator: " + to_hex(generator()) + "}";
}

FieldElement::FieldElement(Field field, Elem bits)
    : field_(std::move(field)), bits_(bits) {
  if (!field_.contains(bits)) {
    fail(ErrorKind::kOutOfRange,
         to_hex(bits) + " is not an element of GF(2^" +
             std::to_string(field_.degree()) + ")");
  }
}

namespace {

const Field& common_field(const FieldElement& x, const FieldElement& y) {
  if (!(x.field() == y.field())) {
    fail(ErrorKind::kFieldMismatch, "operands from different fields " +
                                        x.field().describe() + " and " +
                                        y.field().describe());
  }
  return x.field();
}

}  // namespace

FieldElement add(const FieldElement& x, const FieldElement& y) {
  const Field& f = common_field(x, y);
  return {f, f.add(x.bits(), y.bits())};
}

FieldElement mul(const FieldElement& x, const FieldElement& y) {
  const Field& f = common_field(x, y);
  return {f, f.mul(x.bits(), y.bits())};
}

FieldElement inv(const FieldElement& x) {
  return {x.field(), x.field().inv(x.bits())};
}

FieldElement pow(const FieldElement& x, std::uint64_t e) {
  return {x.field(), x.field().pow(x.bits(), e)};
}

FieldElement sqrt(const FieldElement& x) {
  return {x.field(), x.field().sqrt(x.bits())};
}

int abs_trace(const FieldElement& x) { return x.field().abs_trace(x.bits()); }

FieldElement rel_trace(const FieldElement& x, int r) {
  return {x.field(), x.field().rel_trace(x.bits(), r)};
}

bool in_subfield(const FieldElement& x, int r) {
  return x.field().in_subfield(x.bits(), r);
}

std::string UnitCircleCase::to_string() const {
  switch (kind) {
    case Kind::kCube: return "cube";
    case Kind::kFifth: return "fifth:" + std::to_string(index);
    case Kind::kGeneral: return "general:" + std::to_string(index);
  }
  return "?";
}

UnitCircleCase UnitCircleCase::parse(const std::string& text) {
  if (text == "cube") return cube();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      fail(ErrorKind::kInvalidArgument, "bad unit-circle selector: " + text);
    }
    if (head == "fifth") return fifth(idx);
    if (head == "general") return general(idx);
  }
  fail(ErrorKind::kInvalidArgument, "bad unit-circle selector: " + text);
}

std::vector<Elem> subfield_elements(const Field& field, int r) {
  if (r < 1 || field.degree() % r != 0) {
    fail(ErrorKind::kInvalidArgument, "subfield degree must divide " +
                                          std::to_string(field.degree()));
  }
  const std::uint64_t sub_order = (std::uint64_t{1} << r) - 1;
  const Elem h = field.pow(field.generator(), field.group_order() / sub_order);
  std::vector<Elem> out{0};
  Elem x = 1;
  for (std::uint64_t i = 0; i < sub_order; ++i) {
    out.push_back(x);
    x = field.mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> unit_circle(const Field& field) {
  if (field.degree() % 2 != 0) {
    fail(ErrorKind::kParity, "unit circle needs an even-degree field");
  }
  const int m = field.degree() / 2;
  const std::uint64_t circle_order = (std::uint64_t{1} << m) + 1;
  const Elem h = field.pow(field.generator(), field.group_order() / circle_order);
  std::vector<Elem> out;
  Elem x = h;
  for (std::uint64_t i = 1; i < circle_order; ++i) {
    out.push_back(x);
    x = field.mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Elem unit_circle_element(const Field& field, UnitCircleCase which) {
  if (field.degree() % 2 != 0) {
    fail(ErrorKind::kParity, "unit circle needs an even-degree field");
  }
  const int m = field.degree() / 2;
  const std::uint64_t n = field.group_order();
  switch (which.kind) {
    case UnitCircleCase::Kind::kCube:
      if (m % 2 == 0) {
        fail(ErrorKind::kParity, "cube-root selector needs m odd");
      }
      return field.pow(field.generator(), n / 3);
    case UnitCircleCase::Kind::kFifth:
      if (m % 4 != 2) {
        fail(ErrorKind::kParity, "fifth-root selector needs m = 2 (mod 4)");
      }
      if (which.index < 1 || which.index > 4) {
        fail(ErrorKind::kOutOfRange, "fifth-root index must be in 1..4");
      }
      return field.pow(field.generator(),
                       static_cast<std::uint64_t>(which.index) * (n / 5));
    case UnitCircleCase::Kind::kGeneral: {
      const auto circle = unit_circle(field);
      if (which.index < 0 ||
          static_cast<std::size_t>(which.index) >= circle.size()) {
        fail(ErrorKind::kOutOfRange,
             "unit-circle index out of range (size " +
                 std::to_string(circle.size()) + ")");
      }
      return circle[which.index];
    }
  }
  fail(ErrorKind::kInternal, "unreachable");
}

}  // namespace nihobent
