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

#include "nihobent/niho.hpp"

#include <array>
#include <utility>

namespace nihobent {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                    mod);
}

void check_m(int m) {
  if (m < 1 || 2 * m > kMaxDegree) {
    fail(ErrorKind::kOutOfRange, "m must be in [1, 12], got " +
                                     std::to_string(m));
  }
}

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::kQuadratic, "quadratic"},
    {Family::kBinomial3, "binomial3"},
    {Family::kBinomial4, "binomial4"},
    {Family::kBinomial6, "binomial6"},
    {Family::kLeanderKholosha, "leander-kholosha"},
    {Family::kAdelaide, "adelaide"},
}};

bool is_binomial(Family f) {
  return f == Family::kBinomial3 || f == Family::kBinomial4 ||
         f == Family::kBinomial6 || f == Family::kAdelaide;
}

}  // namespace

std::uint64_t NihoExponent::normalized() const {
  return ((std::uint64_t{1} << m) - 1) * s + 1;
}

std::uint64_t NihoExponent::value() const {
  const std::uint64_t order = (std::uint64_t{1} << (2 * m)) - 1;
  return mulmod(normalized() % order, std::uint64_t{1} << shift, order);
}

NihoExponent niho_normalize(std::uint64_t d, int m) {
  check_m(m);
  const int n = 2 * m;
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  const std::uint64_t small = (std::uint64_t{1} << m) - 1;
  if (d == 0 || d >= order) {
    fail(ErrorKind::kOutOfRange, "exponent must be in (0, 2^n - 1)");
  }
  for (int j = 0; j < n; ++j) {
    if (d % small != (std::uint64_t{1} << j) % small) continue;
    // Multiply by 2^{-j} = 2^{n-j}.
    const std::uint64_t reduced = mulmod(d, std::uint64_t{1} << ((n - j) % n),
                                         order);
    if ((reduced - 1) % small != 0) {
      fail(ErrorKind::kInternal, "normalization left a non-unit residue");
    }
    return {m, (reduced - 1) / small, j};
  }
  fail(ErrorKind::kNotNihoExponent,
       std::to_string(d) + " is not congruent to a power of 2 mod 2^" +
           std::to_string(m) + " - 1");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(mod);
  std::int64_t new_r = static_cast<std::int64_t>(a % mod);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    fail(ErrorKind::kInvalidArgument, std::to_string(a) +
                                          " is not invertible mod " +
                                          std::to_string(mod));
  }
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, known] : kFamilyNames) {
    if (known == name) return f;
  }
  fail(ErrorKind::kInvalidArgument, "unknown family '" + std::string(name) +
                                        "'");
}

std::uint64_t solve_family_exponent(Family family, int m) {
  check_m(m);
  const std::uint64_t circle = (std::uint64_t{1} << m) + 1;
  std::uint64_t s = 0;
  switch (family) {
    case Family::kBinomial3:
      s = 3 % circle;
      break;
    case Family::kBinomial4:
      if (m % 2 == 0) fail(ErrorKind::kParity, "binomial4 needs m odd");
      s = inverse_mod(4, circle);
      break;
    case Family::kBinomial6:
    case Family::kAdelaide:
      if (m % 2 != 0) {
        fail(ErrorKind::kParity, std::string(to_string(family)) +
                                     " needs m even");
      }
      s = inverse_mod(6, circle);
      break;
    default:
      fail(ErrorKind::kInvalidArgument, std::string(to_string(family)) +
                                            " has no second exponent");
  }
  return ((std::uint64_t{1} << m) - 1) * s + 1;
}

bool fifth_power_test(const Field& field, Elem b) {
  if (b == 0) fail(ErrorKind::kZeroCoefficient, "b must be nonzero");
  if (field.group_order() % 5 != 0) {
    fail(ErrorKind::kDomain, "5 does not divide 2^n - 1");
  }
  return field.pow(b, field.group_order() / 5) == 1;
}

namespace {

// Throws on the first violated precondition.
void validate(const FamilySpec& spec, const BuildOptions& options) {
  check_m(spec.m);
  const Field& field = spec.a.field();
  if (field.degree() != 2 * spec.m || !(spec.b.field() == field)) {
    fail(ErrorKind::kFieldMismatch, "coefficients must lie in GF(2^{2m})");
  }
  const int m = spec.m;
  const Elem a = spec.a.bits();
  const Elem b = spec.b.bits();
  switch (spec.family) {
    case Family::kQuadratic:
      if (!field.in_subfield(a, m)) {
        fail(ErrorKind::kNotInSubfield, "a must lie in GF(2^m)");
      }
      if (a == 0) fail(ErrorKind::kZeroCoefficient, "a must be nonzero");
      return;
    case Family::kLeanderKholosha:
      if (spec.r <= 1 || gcd_u64(spec.r, m) != 1) {
        fail(ErrorKind::kInvalidR, "r must exceed 1 and be coprime to m");
      }
      if (spec.r > 16) fail(ErrorKind::kOutOfRange, "r above 16");
      if ((a ^ field.frobenius(a, m)) != 1) {
        fail(ErrorKind::kTraceCondition, "a + a^{2^m} must equal 1");
      }
      return;
    default:
      break;
  }
  if (b == 0) fail(ErrorKind::kZeroCoefficient, "b must be nonzero");
  if (field.pow(b, (std::uint64_t{1} << m) + 1) != a) {
    fail(ErrorKind::kCoefficientRelation, "a must equal b^{2^m+1}");
  }
  // Parity errors come from the exponent solver.
  solve_family_exponent(spec.family, m);
  if (spec.family == Family::kBinomial3 && m % 4 == 2 &&
      options.strict_fifth_power && !fifth_power_test(field, b)) {
    fail(ErrorKind::kNotFifthPower, "b is not a fifth power (strict mode)");
  }
}

}  // namespace

TraceForm build_bent(const FamilySpec& spec, const BuildOptions& options) {
  validate(spec, options);
  const Field& field = spec.a.field();
  const int m = spec.m;
  const int n = 2 * m;
  const std::uint64_t quadratic = (std::uint64_t{1} << m) + 1;
  std::vector<TraceTerm> terms;
  switch (spec.family) {
    case Family::kQuadratic:
      terms.push_back({m, spec.a.bits(), quadratic});
      break;
    case Family::kLeanderKholosha: {
      terms.push_back({n, spec.a.bits(), quadratic});
      const std::uint64_t circle = quadratic;
      const std::uint64_t inv_pow =
          inverse_mod((std::uint64_t{1} << spec.r) % circle, circle);
      const std::uint64_t count = (std::uint64_t{1} << (spec.r - 1)) - 1;
      for (std::uint64_t i = 1; i <= count; ++i) {
        const std::uint64_t s = mulmod(i, inv_pow, circle);
        terms.push_back({n, 1, ((std::uint64_t{1} << m) - 1) * s + 1});
      }
      break;
    }
    default:
      terms.push_back({m, spec.a.bits(), quadratic});
      terms.push_back(
          {n, spec.b.bits(), solve_family_exponent(spec.family, m)});
      break;
  }
  return TraceForm(field, std::move(terms));
}

FamilyReport family_report(const FamilySpec& spec,
                           const BuildOptions& options) {
  FamilyReport report;
  report.family = spec.family;
  report.m = spec.m;
  try {
    validate(spec, options);
  } catch (const Error& e) {
    report.preconditions_ok = false;
    report.violation = std::string(to_string(e.kind())) + ": " + e.what();
  }
  if (spec.m < 1 || 2 * spec.m > kMaxDegree) return report;

  const int m = spec.m;
  const std::uint64_t order = (std::uint64_t{1} << (2 * m)) - 1;
  if (report.preconditions_ok) {
    for (const TraceTerm& t : build_bent(spec, options).terms()) {
      report.exponents.push_back(t.exponent);
    }
  }
  switch (spec.family) {
    case Family::kQuadratic:
      report.expected_degree = 2;
      break;
    case Family::kBinomial3:
      report.expected_degree = m;
      report.fifth_power_condition = m % 4 == 2;
      break;
    case Family::kBinomial4:
      report.expected_degree = 3;
      break;
    case Family::kBinomial6:
    case Family::kAdelaide:
      report.expected_degree = m;
      break;
    case Family::kLeanderKholosha:
      break;
  }
  if (is_binomial(spec.family)) {
    try {
      report.d2 = solve_family_exponent(spec.family, m);
      report.gcd_d2 = gcd_u64(*report.d2, order);
    } catch (const Error&) {
      // parity violation, already recorded
    }
    const Field& field = spec.b.field();
    if (spec.b.bits() != 0 && field.group_order() % 5 == 0) {
      report.fifth_power = fifth_power_test(field, spec.b.bits());
    }
  }
  return report;
}

}  // namespace nihobent
