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

#include "nihobent/ovals.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace nihobent {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInternal;
}

TEST(SubiacoTest, AdmissibleW) {
  const auto d3 = EvalDomain::standalone(Field(3));
  EXPECT_EQ(subiaco_admissible_w(d3, SubiacoCase::kMOdd), std::vector<Elem>{1});
  EXPECT_TRUE(subiaco_admissible_w(d3, SubiacoCase::kMTwoMod4).empty());
  const auto d2 = EvalDomain::standalone(Field(2));
  EXPECT_EQ(subiaco_admissible_w(d2, SubiacoCase::kMTwoMod4).size(), 2u);
  const Field f4(4);
  const auto d4 = EvalDomain::standalone(f4);
  for (Elem w : subiaco_admissible_w(d4, SubiacoCase::kGeneral)) {
    EXPECT_NE(w, 0u);
    EXPECT_NE(f4.mul(w, w) ^ w ^ 1, 0u);
    EXPECT_EQ(f4.abs_trace(f4.inv(w)), 1);
    EXPECT_EQ(f4.abs_trace(make_subiaco_params(d4, SubiacoCase::kGeneral, w).e), 1);
  }
}

TEST(SubiacoTest, ParameterErrors) {
  const auto d4 = EvalDomain::standalone(Field(4));
  EXPECT_EQ(kind_of([&] { make_subiaco_params(d4, SubiacoCase::kMOdd, 1); }),
            ErrorKind::kParity);
  EXPECT_EQ(kind_of([&] { make_subiaco_params(d4, SubiacoCase::kMTwoMod4, 1); }),
            ErrorKind::kParity);
  EXPECT_EQ(kind_of([&] { make_subiaco_params(d4, SubiacoCase::kGeneral, 0); }),
            ErrorKind::kInvalidParams);
  // Some nonzero w with w^2 + w + 1 != 0 has tr(1/w) = 0.
  const Field& f = d4.field();
  bool saw_trace_error = false;
  for (Elem w = 2; w < 16; ++w) {
    if ((f.mul(w, w) ^ w ^ 1) == 0 || f.abs_trace(f.inv(w)) == 1) continue;
    EXPECT_EQ(kind_of([&] { make_subiaco_params(d4, SubiacoCase::kGeneral, w); }),
              ErrorKind::kTraceCondition);
    saw_trace_error = true;
  }
  EXPECT_TRUE(saw_trace_error);
  EXPECT_EQ(parse_subiaco_case("ii"), SubiacoCase::kMTwoMod4);
  EXPECT_THROW(parse_subiaco_case("iv"), Error);
}

void expect_catalog_is_hyperovals(const SubiacoParams& p) {
  const oracle::NaiveField o = oracle::naive(p.domain.field());
  EXPECT_TRUE(oracle::is_hyperoval(subiaco_fg(p).g.values, o));
  for (Elem s = 0; s < p.domain.small().size(); ++s) {
    const MappingTable fs = subiaco_fs(p, s);
    EXPECT_EQ(fs, subiaco_fs_defining(p, s));
    EXPECT_TRUE(oracle::is_hyperoval(fs.values, o)) << "s=" << s;
  }
}

TEST(SubiacoTest, MembersAreHyperovalCoordinates) {
  expect_catalog_is_hyperovals(
      make_subiaco_params(EvalDomain::standalone(Field(3)), SubiacoCase::kMOdd, 1));
  const auto d2 = EvalDomain::standalone(Field(2));
  for (Elem w : subiaco_admissible_w(d2, SubiacoCase::kMTwoMod4)) {
    expect_catalog_is_hyperovals(make_subiaco_params(d2, SubiacoCase::kMTwoMod4, w));
  }
  const auto d4 = EvalDomain::standalone(Field(4));
  for (Elem w : subiaco_admissible_w(d4, SubiacoCase::kGeneral)) {
    expect_catalog_is_hyperovals(make_subiaco_params(d4, SubiacoCase::kGeneral, w));
  }
}

TEST(SubiacoTest, FIsMemberZero) {
  const auto p =
      make_subiaco_params(EvalDomain::standalone(Field(5)), SubiacoCase::kMOdd, 1);
  EXPECT_EQ(subiaco_fs(p, 0), subiaco_fg(p).f);
}

TEST(SubiacoTest, GeneralCaseExplicitFormIsShifted) {
  const auto d4 = EvalDomain::standalone(Field(4));
  for (Elem w : subiaco_admissible_w(d4, SubiacoCase::kGeneral)) {
    const auto p = make_subiaco_params(d4, SubiacoCase::kGeneral, w);
    for (Elem s = 0; s < 16; ++s) {
      EXPECT_EQ(subiaco_fs_explicit(p, s), subiaco_fs_defining(p, s ^ 1));
    }
  }
}

TEST(SubiacoTest, EmbeddedEvaluationAgrees) {
  const FieldTower t(3);
  const auto sa = make_subiaco_params(EvalDomain::standalone(t.small()),
                                      SubiacoCase::kMOdd, 1);
  const auto em = make_subiaco_params(EvalDomain::embedded(t.embedding),
                                      SubiacoCase::kMOdd, 1);
  for (Elem s = 0; s < 8; ++s) {
    EXPECT_EQ(subiaco_fs(sa, s), subiaco_fs(em, t.embedding.lift(s)));
  }
}

TEST(AdelaideTest, AdmissibleBetasAndHyperovals) {
  for (int m : {2, 4}) {
    const FieldTower t(m);
    const auto betas = adelaide_admissible_betas(t.embedding);
    EXPECT_EQ(betas.size(), std::size_t{1} << m);
    const oracle::NaiveField o = oracle::naive(t.small());
    for (Elem beta : betas) {
      const AdelaideParams p = make_adelaide_params(t.embedding, beta);
      const AdelaideMaps fg = adelaide_fg(p);
      EXPECT_TRUE(oracle::is_hyperoval(fg.g.values, o));
      EXPECT_EQ(adelaide_fs(p, 0), fg.f);
      for (Elem s = 0; s < t.small().size(); ++s) {
        EXPECT_TRUE(oracle::is_hyperoval(
            adelaide_fs(p, t.embedding.lift(s)).values, o));
      }
      EXPECT_NO_THROW(adelaide_f1(p));
    }
  }
}

TEST(AdelaideTest, ParameterErrors) {
  const FieldTower t3(3);
  EXPECT_EQ(kind_of([&] { make_adelaide_params(t3.embedding, unit_circle(t3.big())[0]); }),
            ErrorKind::kParity);
  const FieldTower t4(4);
  EXPECT_EQ(kind_of([&] { make_adelaide_params(t4.embedding, 1); }),
            ErrorKind::kInvalidParams);
  EXPECT_EQ(kind_of([&] { make_adelaide_params(t4.embedding, t4.big().generator()); }),
            ErrorKind::kInvalidParams);
}

TEST(CorrespondenceTest, SubiacoOddMEveryB) {
  const FieldTower t(3);
  int degenerate = 0;
  const Elem u = unit_circle_element(t.big(), UnitCircleCase::cube());
  for (Elem b = 1; b < t.big().size(); ++b) {
    const Correspondence c = correspond_subiaco(t, b, UnitCircleCase::cube());
    EXPECT_TRUE(c.verified) << "b=" << b;
    EXPECT_EQ(c.points_checked, 8);
    if (c.branch == Branch::kDegenerate) {
      ++degenerate;
      EXPECT_EQ(t.big().pow(b, 7), t.big().mul(u, u));
      EXPECT_EQ(c.member, "g");
    }
  }
  EXPECT_EQ(degenerate, 7);
  const Correspondence one = correspond_subiaco(t, 1, UnitCircleCase::cube());
  EXPECT_EQ(one.s, Elem{0});
}

TEST(CorrespondenceTest, ParameterIsOnto) {
  for (int m : {2, 3}) {
    const FieldTower t(m);
    const auto which = default_unit_circle_case(m);
    const Elem u = unit_circle_element(t.big(), which);
    const auto counts = subiaco_parameter_counts(t, u);
    EXPECT_EQ(counts.size(), t.small().size()) << "m=" << m;
    for (const auto& [s, n] : counts) EXPECT_EQ(n, m == 3 ? 7 : 3);
  }
}

TEST(CorrespondenceTest, SubiacoTwoModFourEveryB) {
  const FieldTower t(2);
  for (Elem b = 1; b < 16; ++b) {
    const Correspondence c = correspond_subiaco(t, b, UnitCircleCase::fifth(1));
    EXPECT_TRUE(c.verified) << "b=" << b;
    EXPECT_EQ(c.branch, Branch::kGeneric);
    ASSERT_TRUE(c.fifth_index.has_value());
  }
  // With u pinned, the degenerate branch uses g.
  for (int j = 1; j <= 4; ++j) {
    const Elem u = unit_circle_element(t.big(), UnitCircleCase::fifth(j));
    int degenerate = 0;
    for (Elem b = 1; b < 16; ++b) {
      const Correspondence c = correspond_subiaco_fixed_u(t, b, u);
      EXPECT_TRUE(c.verified);
      if (c.branch == Branch::kDegenerate) ++degenerate;
    }
    EXPECT_EQ(degenerate, 3);
  }
}

TEST(CorrespondenceTest, ZeroModFourOnlyForBOne) {
  const FieldTower t(4);
  const Correspondence c = correspond_subiaco(t, 1, UnitCircleCase::general(0));
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.catalog_case, "iii");
  EXPECT_EQ(kind_of([&] { correspond_subiaco(t, 2, UnitCircleCase::general(0)); }),
            ErrorKind::kUnsupported);
}

TEST(CorrespondenceTest, AdelaideEveryBeta) {
  for (int m : {2, 4}) {
    const FieldTower t(m);
    for (Elem beta : adelaide_admissible_betas(t.embedding)) {
      const Correspondence c = correspond_adelaide(t, beta);
      EXPECT_TRUE(c.verified) << "m=" << m << " beta=" << beta;
      EXPECT_EQ(c.member, "f_1");
    }
  }
}

}  // namespace
}  // namespace nihobent
