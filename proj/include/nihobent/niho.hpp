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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nihobent/boolfn.hpp"
#include "nihobent/field.hpp"

namespace nihobent {

// d = 2^shift * ((2^m - 1) * s + 1) mod 2^{2m} - 1, with s in [0, 2^m].
struct NihoExponent {
  int m = 0;
  std::uint64_t s = 0;
  int shift = 0;

  // (2^m - 1) * s + 1, the exponent with the power of two removed.
  std::uint64_t normalized() const;
  // The original exponent.
  std::uint64_t value() const;
};

NihoExponent niho_normalize(std::uint64_t d, int m);

// a^{-1} mod `mod`; kInvalidArgument when not invertible.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod);

enum class Family {
  kQuadratic,
  kBinomial3,
  kBinomial4,
  kBinomial6,
  kLeanderKholosha,
  kAdelaide,
};

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

// Exponent d2 = (2^m - 1) s + 1 of the second binomial term, with s solving
// c * d2 = (2^m - 1) + c reduced to c * s = 1 (mod 2^m + 1) (c = 4, 6), or
// s = 3 for Binomial3.
std::uint64_t solve_family_exponent(Family family, int m);

// b^{(2^n - 1)/5} == 1.
bool fifth_power_test(const Field& field, Elem b);

struct FamilySpec {
  Family family = Family::kQuadratic;
  int m = 0;
  FieldElement a;  // GF(2^m) coefficient, embedded in GF(2^{2m}); for
                   // LeanderKholosha any a with a + a^{2^m} = 1
  FieldElement b;  // unused for Quadratic and LeanderKholosha
  int r = 0;       // LeanderKholosha only
};

struct BuildOptions {
  // Restores the fifth-power requirement on b for Binomial3, m = 2 (mod 4).
  bool strict_fifth_power = false;
};

TraceForm build_bent(const FamilySpec& spec, const BuildOptions& options = {});

struct FamilyReport {
  Family family = Family::kQuadratic;
  int m = 0;
  std::vector<std::uint64_t> exponents;
  std::optional<std::uint64_t> d2;
  std::optional<std::uint64_t> gcd_d2;  // gcd(d2, 2^n - 1)
  std::optional<bool> fifth_power;      // b is a fifth power in GF(2^n)
  bool fifth_power_condition = false;   // the original theorem asked for it
  std::optional<int> expected_degree;
  bool preconditions_ok = true;
  std::string violation;
};

FamilyReport family_report(const FamilySpec& spec,
                           const BuildOptions& options = {});

}  // namespace nihobent
