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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

namespace nihobent {
namespace {

TEST(IrreducibilityTest, MatchesSieveUpToDegreeTwelve) {
  for (int k = 1; k <= 12; ++k) {
    const auto expected = oracle::irreducibles_by_sieve(k);
    const std::set<std::uint32_t> irr(expected.begin(), expected.end());
    for (std::uint32_t p = 1u << k; p < (2u << k); ++p) {
      EXPECT_EQ(is_irreducible(p), irr.count(p) == 1) << to_hex(p);
    }
  }
}

TEST(IrreducibilityTest, DefaultModulusIsSmallestWithConstantTerm) {
  for (int k = 1; k <= 16; ++k) {
    const auto all = oracle::irreducibles_by_sieve(k);
    const auto it = std::find_if(all.begin(), all.end(),
                                 [](std::uint32_t p) { return p & 1; });
    ASSERT_NE(it, all.end());
    EXPECT_EQ(default_modulus(k), *it) << "k=" << k;
  }
  EXPECT_EQ(default_modulus(3), 0xbu);
  EXPECT_EQ(default_modulus(4), 0x13u);
}

TEST(FieldTest, SmallExamplesInGf8) {
  const Field f(3);
  EXPECT_EQ(f.mul(0x2, 0x2), 0x4u);
  EXPECT_EQ(f.mul(0x4, 0x2), 0x3u);
  EXPECT_EQ(f.inv(0x2), 0x5u);
  EXPECT_EQ(f.sqrt(0x2), 0x6u);
}

TEST(FieldTest, ArithmeticAgreesWithSchoolbookOracle) {
  for (int k : {1, 2, 3, 4, 5, 6, 8}) {
    const Field f(k);
    const oracle::NaiveField o = oracle::naive(f);
    for (Elem x = 0; x < f.size(); ++x) {
      for (Elem y = 0; y < f.size(); ++y) {
        ASSERT_EQ(f.mul(x, y), o.mul(x, y));
      }
      EXPECT_EQ(f.abs_trace(x), o.trace(x));
      EXPECT_EQ(f.sqrt(x), o.sqrt(x));
      if (x != 0) EXPECT_EQ(f.inv(x), o.inv(x));
      EXPECT_EQ(f.pow(x, 7), o.pow(x, 7));
    }
  }
}

TEST(FieldTest, GeneratorIsPrimitive) {
  for (int k = 1; k <= 12; ++k) {
    const Field f(k);
    std::set<Elem> seen;
    Elem x = 1;
    for (std::uint64_t i = 0; i < f.group_order(); ++i) {
      seen.insert(x);
      x = f.mul(x, f.generator());
    }
    EXPECT_EQ(seen.size(), f.group_order()) << "k=" << k;
    EXPECT_EQ(f.order(f.generator()), f.group_order());
  }
}

TEST(FieldTest, PowConventions) {
  const Field f(4);
  EXPECT_EQ(f.pow(0, 0), 1u);
  EXPECT_EQ(f.pow(0, 5), 0u);
  EXPECT_EQ(f.pow(0x7, f.group_order()), 1u);
}

TEST(FieldTest, InverseOfZeroIsDomainError) {
  const Field f(5);
  try {
    f.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

TEST(FieldTest, RejectsReducibleModulus) {
  EXPECT_THROW(Field(4, 0x15), Error);  // (x^2+x+1)^2
  EXPECT_THROW(Field(4, 0x0b), Error);  // wrong degree
}

TEST(FieldTest, DualBasis) {
  for (int k : {3, 4, 6, 8}) {
    const Field f(k);
    const auto dual = f.trace_dual_basis();
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        EXPECT_EQ(f.abs_trace(f.mul(Elem{1} << i, dual[j])), i == j ? 1 : 0);
      }
    }
  }
}

TEST(FieldTest, RelativeTraceAndSubfields) {
  const Field f(6);
  for (int r : {1, 2, 3, 6}) {
    const auto sub = subfield_elements(f, r);
    EXPECT_EQ(sub.size(), std::size_t{1} << r);
    std::set<Elem> brute;
    for (Elem x = 0; x < f.size(); ++x) {
      if (f.pow(x, std::uint64_t{1} << r) == x) brute.insert(x);
      const Elem t = f.rel_trace(x, r);
      EXPECT_TRUE(f.in_subfield(t, r));
      EXPECT_EQ(f.in_subfield(x, r), f.pow(x, std::uint64_t{1} << r) == x);
    }
    EXPECT_TRUE(std::equal(sub.begin(), sub.end(), brute.begin(), brute.end()));
  }
  EXPECT_THROW(f.rel_trace(3, 4), Error);
  try {
    f.subfield_trace(f.generator(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotInSubfield);
  }
}

TEST(FieldElementTest, MixingFieldsIsRejected) {
  const FieldElement x(Field(3), 3);
  const FieldElement y(Field(4), 3);
  try {
    (void)(x + y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFieldMismatch);
  }
  EXPECT_THROW(FieldElement(Field(3), 8), Error);
  EXPECT_EQ((x * x).bits(), Field(3).mul(3, 3));
}

TEST(UnitCircleTest, SizesAndSelectors) {
  for (int m : {2, 3, 4, 5}) {
    const Field big(2 * m);
    const auto circle = unit_circle(big);
    EXPECT_EQ(circle.size(), std::size_t{1} << m);
    for (Elem u : circle) {
      EXPECT_EQ(big.pow(u, (std::uint64_t{1} << m) + 1), 1u);
      EXPECT_NE(u, 1u);
    }
    EXPECT_TRUE(std::is_sorted(circle.begin(), circle.end()));
  }
  const Field gf64(6);
  EXPECT_EQ(gf64.pow(unit_circle_element(gf64, UnitCircleCase::cube()), 3), 1u);
  const Field gf16(4);
  for (int j = 1; j <= 4; ++j) {
    const Elem u = unit_circle_element(gf16, UnitCircleCase::fifth(j));
    EXPECT_EQ(gf16.pow(u, 5), 1u);
    EXPECT_NE(u, 1u);
  }
  EXPECT_THROW(unit_circle_element(gf16, UnitCircleCase::cube()), Error);
  EXPECT_EQ(UnitCircleCase::parse("fifth:3").index, 3);
  EXPECT_EQ(UnitCircleCase::parse("general:2").to_string(), "general:2");
  EXPECT_THROW(UnitCircleCase::parse("sixth"), Error);
}

}  // namespace
}  // namespace nihobent
