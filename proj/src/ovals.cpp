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

#include "nihobent/boolfn.hpp"
#include "nihobent/niho.hpp"

namespace nihobent {

std::string_view to_string(SubiacoCase c) {
  switch (c) {
    case SubiacoCase::kMOdd: return "i";
    case SubiacoCase::kMTwoMod4: return "ii";
    case SubiacoCase::kGeneral: return "iii";
  }
  return "?";
}

SubiacoCase parse_subiaco_case(std::string_view text) {
  if (text == "i") return SubiacoCase::kMOdd;
  if (text == "ii") return SubiacoCase::kMTwoMod4;
  if (text == "iii") return SubiacoCase::kGeneral;
  fail(ErrorKind::kInvalidArgument,
       "subiaco case must be i, ii or iii, got '" + std::string(text) + "'");
}

std::string_view to_string(Branch b) {
  return b == Branch::kGeneric ? "generic" : "degenerate";
}

namespace {

// Arithmetic shorthands over one field.
struct Ops {
  const Field& F;

  Elem mul(Elem x, Elem y) const { return F.mul(x, y); }
  Elem mul(Elem x, Elem y, Elem z) const { return F.mul(F.mul(x, y), z); }
  Elem sq(Elem x) const { return F.square(x); }
  Elem pow(Elem x, std::uint64_t e) const { return F.pow(x, e); }
  Elem div(Elem x, Elem y) const { return F.div(x, y); }
  Elem inv(Elem x) const { return F.inv(x); }
  Elem root(Elem x) const { return F.sqrt(x); }
};

Elem case_iii_e(const Ops& o, Elem w) {
  const Elem W = 1 ^ w ^ o.sq(w);
  const Elem E = o.sq(w) ^ o.pow(w, 5) ^ o.root(w);
  return o.div(E, o.mul(w, W));
}

struct FG {
  Elem f;
  Elem g;
};

FG subiaco_point(const SubiacoParams& p, Elem x) {
  const Ops o{p.domain.field()};
  const Elem w = p.w;
  const Elem x2 = o.sq(x);
  const Elem rx = o.root(x);
  switch (p.kase) {
    case SubiacoCase::kMOdd: {
      const Elem D = o.sq(x2 ^ x ^ 1);
      return {o.div(x2 ^ x, D) ^ rx, o.div(o.sq(x2) ^ o.mul(x2, x), D) ^ rx};
    }
    case SubiacoCase::kMTwoMod4: {
      const Elem D = o.sq(x2 ^ o.mul(w, x) ^ 1);
      const Elem w2 = o.sq(w);
      return {o.div(o.mul(x2, x2 ^ o.mul(w, x) ^ w), D) ^ o.mul(w2, rx),
              o.div(o.mul(w, x, x2 ^ x ^ w2), D) ^ o.mul(w2, rx)};
    }
    case SubiacoCase::kGeneral: {
      const Elem D = o.sq(x2 ^ o.mul(w, x) ^ 1);
      const Elem w2 = o.sq(w);
      const Elem w3 = o.mul(w2, w);
      const Elem w4 = o.sq(w2);
      const Elem W = 1 ^ w ^ w2;
      const Elem E = w2 ^ o.pow(w, 5) ^ o.root(w);
      const Elem x3 = o.mul(x2, x);
      const Elem x4 = o.sq(x2);
      const Elem f = o.div(o.mul(w2, x4 ^ x) ^ o.mul(w2, W, x3 ^ x2), D) ^ rx;
      const Elem g_num = o.mul(w4, x4) ^ o.mul(w3, 1 ^ w2 ^ w4, x3) ^
                         o.mul(w3, 1 ^ w2, x);
      const Elem g = o.div(g_num, o.mul(E, D)) ^ o.mul(o.div(o.root(w), E), rx);
      return {f, g};
    }
  }
  fail(ErrorKind::kInternal, "unreachable");
}

Elem subiaco_explicit_point(const SubiacoParams& p, Elem s, Elem x) {
  const Ops o{p.domain.field()};
  const Elem w = p.w;
  const Elem x2 = o.sq(x);
  const Elem x3 = o.mul(x2, x);
  const Elem x4 = o.sq(x2);
  const Elem rx = o.root(x);
  const Elem rs = o.root(s);
  switch (p.kase) {
    case SubiacoCase::kMOdd: {
      const Elem A = 1 ^ s ^ rs;
      const Elem D = o.sq(x2 ^ x ^ 1);
      return o.div(o.mul(s, x4 ^ x3) ^ x2 ^ x, o.mul(A, D)) ^ rx;
    }
    case SubiacoCase::kMTwoMod4: {
      const Elem A = 1 ^ o.mul(w, s) ^ rs;
      const Elem D = o.sq(x2 ^ o.mul(w, x) ^ 1);
      const Elem num = x4 ^ o.mul(w, o.mul(s, w) ^ 1, x3 ^ x2) ^ o.mul(s, w, x);
      return o.div(o.div(num, D) ^ o.mul(o.sq(w) ^ s ^ rs, rx), A);
    }
    case SubiacoCase::kGeneral: {
      const Elem w2 = o.sq(w);
      const Elem W = 1 ^ w ^ w2;
      const Elem D = o.sq(x2 ^ o.mul(w, x) ^ 1);
      const Elem num = o.mul(1 ^ o.mul(s, w) ^ w2, x4) ^
                       o.mul(o.sq(W), o.mul(s, x3) ^ x2) ^
                       o.mul(s ^ w ^ o.mul(s, w2), x);
      const Elem rational = o.mul(w2, o.div(num, o.mul(W, D)));
      const Elem root_coeff = rs ^ o.div(s ^ 1, o.mul(o.root(w), W));
      const Elem scale = p.e ^ o.mul(p.e, s) ^ rs;
      return o.div(rational ^ o.mul(root_coeff, rx), scale);
    }
  }
  fail(ErrorKind::kInternal, "unreachable");
}

}  // namespace

SubiacoParams make_subiaco_params(EvalDomain domain, SubiacoCase kase,
                                  Elem w) {
  const Field& F = domain.field();
  const Ops o{F};
  const int m = domain.m();
  if (!F.contains(w) || !domain.in_domain_field(w)) {
    fail(ErrorKind::kNotInSubfield, "w must lie in GF(2^m)");
  }
  Elem e = 0;
  switch (kase) {
    case SubiacoCase::kMOdd:
      if (m % 2 == 0) fail(ErrorKind::kParity, "case (i) needs m odd");
      if (w != 1) fail(ErrorKind::kInvalidParams, "case (i) uses w = 1");
      e = 1;
      break;
    case SubiacoCase::kMTwoMod4:
      if (m % 4 != 2) fail(ErrorKind::kParity, "case (ii) needs m = 2 mod 4");
      if ((o.sq(w) ^ w ^ 1) != 0) {
        fail(ErrorKind::kInvalidParams, "case (ii) needs w^2 + w + 1 = 0");
      }
      e = w;
      break;
    case SubiacoCase::kGeneral:
      if (w == 0 || (o.sq(w) ^ w ^ 1) == 0) {
        fail(ErrorKind::kInvalidParams,
             "case (iii) needs w != 0 and w^2 + w + 1 != 0");
      }
      if (domain.trace_m(o.inv(w)) != 1) {
        fail(ErrorKind::kTraceCondition, "case (iii) needs tr(1/w) = 1");
      }
      e = case_iii_e(o, w);
      break;
  }
  if (domain.trace_m(e) != 1) {
    fail(ErrorKind::kInternal, "derived e does not have trace 1");
  }
  return {kase, std::move(domain), w, e};
}

std::vector<Elem> subiaco_admissible_w(const EvalDomain& domain,
                                       SubiacoCase kase) {
  std::vector<Elem> out;
  for (Elem z = 0; z < domain.small().size(); ++z) {
    const Elem w = domain.lift(z);
    try {
      make_subiaco_params(domain, kase, w);
      out.push_back(w);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kParity) return {};
    }
  }
  return out;
}

MapPair subiaco_fg(const SubiacoParams& p) {
  return {p.domain.tabulate([&](Elem x) { return subiaco_point(p, x).f; }),
          p.domain.tabulate([&](Elem x) { return subiaco_point(p, x).g; })};
}

Elem subiaco_denominator(const SubiacoParams& p, Elem s) {
  const Ops o{p.domain.field()};
  return 1 ^ o.mul(p.e, s) ^ o.root(s);
}

namespace {

void check_s(const SubiacoParams& p, Elem s) {
  if (!p.domain.field().contains(s) || !p.domain.in_domain_field(s)) {
    fail(ErrorKind::kNotInSubfield, "s must lie in GF(2^m)");
  }
}

}  // namespace

MappingTable subiaco_fs_defining(const SubiacoParams& p, Elem s) {
  check_s(p, s);
  const Ops o{p.domain.field()};
  const Elem A = subiaco_denominator(p, s);
  if (A == 0) fail(ErrorKind::kInternal, "1 + es + s^{1/2} vanished");
  const Elem es = o.mul(p.e, s);
  const Elem rs = o.root(s);
  return p.domain.tabulate([&](Elem x) {
    const FG fg = subiaco_point(p, x);
    return o.div(fg.f ^ o.mul(es, fg.g) ^ o.mul(rs, o.root(x)), A);
  });
}

MappingTable subiaco_fs_explicit(const SubiacoParams& p, Elem s) {
  check_s(p, s);
  return p.domain.tabulate(
      [&](Elem x) { return subiaco_explicit_point(p, s, x); });
}

MappingTable subiaco_fs(const SubiacoParams& p, Elem s) {
  MappingTable fs = subiaco_fs_defining(p, s);
  const Elem explicit_s = p.kase == SubiacoCase::kGeneral ? s ^ 1 : s;
  if (!(subiaco_fs_explicit(p, explicit_s) == fs)) {
    fail(ErrorKind::kInternal,
         "f_s from the definition disagrees with its explicit form");
  }
  return fs;
}

AdelaideParams make_adelaide_params(const SubfieldEmbedding& embedding,
                                    Elem beta) {
  const Field& big = embedding.big();
  const int m = embedding.small().degree();
  if (big.degree() != 2 * m) {
    fail(ErrorKind::kFieldMismatch, "Adelaide needs GF(2^m) in GF(2^{2m})");
  }
  if (m % 2 != 0) fail(ErrorKind::kParity, "Adelaide needs m even");
  const std::uint64_t q = std::uint64_t{1} << m;
  if (!big.contains(beta) || beta == 1 || big.pow(beta, q + 1) != 1) {
    fail(ErrorKind::kInvalidParams,
         "beta must satisfy beta^{2^m+1} = 1, beta != 1");
  }
  AdelaideParams p{EvalDomain::embedded(embedding), beta, (q - 1) / 3};
  const Ops o{big};
  const auto T = [&](Elem x) { return x ^ big.frobenius(x, m); };
  p.tr_beta = T(beta);
  p.tr_beta_l = T(o.pow(beta, p.l));
  if (p.tr_beta == 0 || p.tr_beta_l == 0) {
    fail(ErrorKind::kInvalidParams, "tr(beta) and tr(beta^l) must be nonzero");
  }
  p.e = o.div(p.tr_beta_l, p.tr_beta) ^ o.inv(p.tr_beta_l) ^ 1;
  if (p.e == 0) fail(ErrorKind::kInvalidParams, "e vanished");
  return p;
}

std::vector<Elem> adelaide_admissible_betas(
    const SubfieldEmbedding& embedding) {
  std::vector<Elem> out;
  for (Elem beta : unit_circle(embedding.big())) {
    try {
      make_adelaide_params(embedding, beta);
      out.push_back(beta);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInvalidParams) throw;
    }
  }
  return out;
}

namespace {

struct AdelaidePoint {
  Elem f;
  Elem g;
  Elem den;  // (x + tr(beta) x^{1/2} + 1)^{l-1}
};

AdelaidePoint adelaide_point(const AdelaideParams& p, Elem x) {
  const Field& big = p.domain.field();
  const Ops o{big};
  const int m = p.domain.m();
  const auto T = [&](Elem y) { return y ^ big.frobenius(y, m); };
  const Elem rx = o.root(x);
  const Elem base = x ^ o.mul(p.tr_beta, rx) ^ 1;
  if (base == 0) fail(ErrorKind::kInternal, "Adelaide denominator vanished");
  const Elem den = o.pow(base, p.l - 1);
  const Elem beta_inv = o.inv(p.beta);
  const Elem f = o.div(o.mul(p.tr_beta_l, x ^ 1), p.tr_beta) ^
                 o.div(T(o.pow(o.mul(p.beta, x) ^ beta_inv, p.l)),
                       o.mul(p.tr_beta, den)) ^
                 rx;
  const Elem eg = o.mul(o.div(p.tr_beta_l, p.tr_beta), x) ^
                  o.div(T(o.pow(o.mul(o.sq(p.beta), x) ^ 1, p.l)),
                        o.mul(p.tr_beta, p.tr_beta_l, den)) ^
                  o.div(rx, p.tr_beta_l);
  return {f, o.div(eg, p.e), den};
}

}  // namespace

AdelaideMaps adelaide_fg(const AdelaideParams& p) {
  return {p.domain.tabulate([&](Elem x) { return adelaide_point(p, x).f; }),
          p.domain.tabulate([&](Elem x) { return adelaide_point(p, x).g; }),
          p.domain.project(p.e)};
}

MappingTable adelaide_fs(const AdelaideParams& p, Elem s) {
  const Field& big = p.domain.field();
  if (!big.contains(s) || !p.domain.in_domain_field(s)) {
    fail(ErrorKind::kNotInSubfield, "s must lie in GF(2^m)");
  }
  const Ops o{big};
  const Elem A = 1 ^ o.mul(p.e, s) ^ o.root(s);
  if (A == 0) fail(ErrorKind::kInternal, "1 + es + s^{1/2} vanished");
  const Elem es = o.mul(p.e, s);
  const Elem rs = o.root(s);
  return p.domain.tabulate([&](Elem x) {
    const AdelaidePoint pt = adelaide_point(p, x);
    return o.div(pt.f ^ o.mul(es, pt.g) ^ o.mul(rs, o.root(x)), A);
  });
}

MappingTable adelaide_f1_scaled_display(const AdelaideParams& p) {
  const Field& big = p.domain.field();
  const Ops o{big};
  const int m = p.domain.m();
  const auto T = [&](Elem y) { return y ^ big.frobenius(y, m); };
  const Elem beta2 = o.sq(p.beta);
  const Elem constant = T(o.pow(p.beta, 2 * p.l));
  return p.domain.tabulate([&](Elem x) {
    const Elem den = o.pow(x ^ o.mul(p.tr_beta, o.root(x)) ^ 1, p.l - 1);
    return constant ^ o.div(T(o.pow(x ^ beta2, p.l)), den) ^
           o.mul(p.tr_beta, o.root(x));
  });
}

MappingTable adelaide_f1(const AdelaideParams& p) {
  MappingTable f1 = adelaide_fs(p, 1);
  const MappingTable display = adelaide_f1_scaled_display(p);
  const Field& small = f1.field;
  const Elem scale = p.domain.project(
      p.domain.field().mul(p.e, p.domain.field().mul(p.tr_beta, p.tr_beta_l)));
  for (Elem z = 0; z < small.size(); ++z) {
    if (small.mul(scale, f1.values[z]) != display.values[z]) {
      fail(ErrorKind::kInternal, "f_1 disagrees with its expanded display");
    }
  }
  return f1;
}

UnitCircleCase default_unit_circle_case(int m) {
  if (m % 2 == 1) return UnitCircleCase::cube();
  if (m % 4 == 2) return UnitCircleCase::fifth(1);
  return UnitCircleCase::general(0);
}

namespace {

Elem relative_trace(const FieldTower& t, Elem x) {
  return x ^ t.big().frobenius(x, t.m());
}

void check_unit_circle_u(const FieldTower& t, Elem u) {
  const Field& big = t.big();
  const std::uint64_t q = std::uint64_t{1} << t.m();
  if (!big.contains(u) || u == 0 || big.pow(u, q + 1) != 1 ||
      big.in_subfield(u, t.m())) {
    fail(ErrorKind::kInvalidParams,
         "u must satisfy u^{2^m+1} = 1 and lie outside GF(2^m)");
  }
  const int m = t.m();
  if (m % 2 == 1 && big.pow(u, 3) != 1) {
    fail(ErrorKind::kInvalidParams, "m odd needs u in GF(4)");
  }
  if (m % 4 == 2 && big.pow(u, 5) != 1) {
    fail(ErrorKind::kInvalidParams, "m = 2 mod 4 needs u^5 = 1");
  }
}

MappingTable binomial3_G(const FieldTower& t, Elem b, Elem u) {
  const Field& big = t.big();
  const Elem a = big.pow(b, (std::uint64_t{1} << t.m()) + 1);
  const FamilySpec spec{Family::kBinomial3, t.m(), FieldElement(big, a),
                        FieldElement(big, b)};
  const TruthTable f = eval_trace_form(build_bent(spec));
  return extract_G(f, make_basis(big, t.m(), u, 1), t.embedding);
}

void verify(Correspondence& c) {
  const Field& small = c.extracted_G.field;
  c.points_checked = 0;
  c.verified = true;
  for (Elem z = 0; z < small.size(); ++z) {
    ++c.points_checked;
    if (c.extracted_G.values[z] !=
        (c.c0 ^ small.mul(c.c1, c.catalog_member.values[z]))) {
      c.verified = false;
    }
  }
}

}  // namespace

std::optional<Elem> subiaco_parameter(const FieldTower& tower, Elem b,
                                      Elem u) {
  check_unit_circle_u(tower, u);
  const Field& big = tower.big();
  const Ops o{big};
  const int m = tower.m();
  const std::uint64_t q = std::uint64_t{1} << m;
  if (b == 0 || !big.contains(b)) {
    fail(ErrorKind::kZeroCoefficient, "b must be a nonzero element");
  }
  if (m % 2 == 1) {
    if (o.pow(b, q - 1) == o.sq(u)) return std::nullopt;
    const Elem B = o.div(b, o.root(o.pow(b, q + 1)));
    const Elem B2 = o.sq(B);
    return o.div(1 ^ B2, o.sq(u) ^ o.mul(B2, u));
  }
  if (m % 4 == 2) {
    const Elem den = relative_trace(tower, o.mul(b, o.pow(u, 4) ^ 1));
    if (den == 0) return std::nullopt;
    return o.div(o.mul(o.sq(relative_trace(tower, u)),
                       relative_trace(tower, o.mul(b, u ^ 1))),
                 den);
  }
  fail(ErrorKind::kUnsupported,
       "the b -> s correspondence is only known for m odd or m = 2 mod 4");
}

std::map<Elem, int> subiaco_parameter_counts(const FieldTower& tower, Elem u) {
  std::map<Elem, int> counts;
  for (Elem b = 1; b < tower.big().size(); ++b) {
    if (auto s = subiaco_parameter(tower, b, u)) {
      ++counts[tower.embedding.project(*s)];
    }
  }
  return counts;
}

Correspondence correspond_subiaco_fixed_u(const FieldTower& tower, Elem b,
                                          Elem u) {
  check_unit_circle_u(tower, u);
  const Field& big = tower.big();
  const Ops o{big};
  const int m = tower.m();
  const std::uint64_t q = std::uint64_t{1} << m;
  if (b == 0 || !big.contains(b)) {
    fail(ErrorKind::kZeroCoefficient, "b must be a nonzero element");
  }
  const SubfieldEmbedding& emb = tower.embedding;
  const EvalDomain domain = EvalDomain::embedded(emb);
  const auto T = [&](Elem x) { return relative_trace(tower, x); };
  const Elem a = o.pow(b, q + 1);
  const Elem sqrt_a = o.root(a);
  const Elem w = T(u);

  Correspondence c;
  c.family = "subiaco";
  c.u = u;
  c.input = b;
  c.extracted_G = binomial3_G(tower, b, u);

  Elem c0 = 0;
  Elem c1 = 0;
  std::optional<Elem> s;
  if (m % 2 == 1) {
    const SubiacoParams params =
        make_subiaco_params(domain, SubiacoCase::kMOdd, 1);
    s = subiaco_parameter(tower, b, u);
    if (s) {
      c.catalog_member = subiaco_fs(params, *s);
      c0 = sqrt_a ^ T(o.mul(b, u));
      c1 = sqrt_a;
    } else {
      c.catalog_member = subiaco_fg(params).g;
      c0 = c1 = o.mul(b, u);
    }
    c.catalog_case = "i";
    c.w = emb.project(params.w);
    c.e = emb.project(params.e);
  } else if (m % 4 == 2) {
    const SubiacoParams params =
        make_subiaco_params(domain, SubiacoCase::kMTwoMod4, w);
    s = subiaco_parameter(tower, b, u);
    const Elem den = T(o.mul(b, o.pow(u, 4) ^ 1));
    c0 = sqrt_a ^ T(b);
    if (s) {
      c.catalog_member = subiaco_fs(params, *s);
      c1 = o.mul(subiaco_denominator(params, *s), den);
    } else {
      c.catalog_member = subiaco_fg(params).g;
      c1 = o.mul(b, o.sq(u));
    }
    c.catalog_case = "ii";
    c.w = emb.project(params.w);
    c.e = emb.project(params.e);
  } else {
    if (b != 1) {
      fail(ErrorKind::kUnsupported,
           "m = 0 mod 4 is only covered for b = 1");
    }
    const SubiacoParams params =
        make_subiaco_params(domain, SubiacoCase::kGeneral, w);
    // f_0 of the s+1-shifted expansion, i.e. f_1 in the defining form.
    s = 1;
    c.catalog_member = subiaco_fs(params, *s);
    c0 = 1 ^ T(o.pow(u, 5));
    c1 = o.sq(w) ^ o.pow(w, 5) ^ o.root(w);
    c.catalog_case = "iii";
    c.w = emb.project(params.w);
    c.e = emb.project(params.e);
  }
  c.branch = s ? Branch::kGeneric : Branch::kDegenerate;
  c.member = s ? "f_s" : "g";
  if (s) c.s = emb.project(*s);
  c.c0 = emb.project(c0);
  c.c1 = emb.project(c1);
  verify(c);
  return c;
}

Correspondence correspond_subiaco(const FieldTower& tower, Elem b,
                                  UnitCircleCase which) {
  const Field& big = tower.big();
  const int m = tower.m();
  const std::uint64_t q = std::uint64_t{1} << m;
  if (which.kind == UnitCircleCase::Kind::kFifth && m % 4 == 2 && b != 0 &&
      big.contains(b)) {
    const Elem b_pow = big.pow(b, q - 1);
    for (int k = 0; k < 4; ++k) {
      const int j = (which.index - 1 + k) % 4 + 1;
      const Elem u = unit_circle_element(big, UnitCircleCase::fifth(j));
      if (b_pow == big.pow(u, 4)) continue;
      Correspondence c = correspond_subiaco_fixed_u(tower, b, u);
      c.fifth_index = j;
      return c;
    }
    fail(ErrorKind::kInternal, "every fifth-root choice is degenerate");
  }
  return correspond_subiaco_fixed_u(tower, b, unit_circle_element(big, which));
}

Correspondence correspond_adelaide(const FieldTower& tower, Elem beta) {
  const AdelaideParams params = make_adelaide_params(tower.embedding, beta);
  const Field& big = tower.big();
  const Ops o{big};
  const auto T = [&](Elem x) { return relative_trace(tower, x); };

  const FamilySpec spec{Family::kAdelaide, tower.m(), FieldElement(big, 1),
                        FieldElement(big, 1)};
  const TruthTable f = eval_trace_form(build_bent(spec));
  const Elem u = o.sq(beta);

  Correspondence c;
  c.family = "adelaide";
  c.catalog_case = "adelaide";
  c.member = "f_1";
  c.branch = Branch::kGeneric;
  c.s = 1;
  c.u = u;
  c.input = beta;
  c.e = tower.embedding.project(params.e);
  c.w = tower.embedding.project(T(u));
  c.extracted_G = extract_G(f, make_basis(big, tower.m(), u, 1),
                            tower.embedding);
  c.catalog_member = adelaide_f1(params);
  c.c0 = tower.embedding.project(1 ^ T(o.pow(beta, 2 * params.l)));
  c.c1 = tower.embedding.project(
      o.mul(params.e, o.mul(params.tr_beta, params.tr_beta_l)));
  verify(c);
  return c;
}

}  // namespace nihobent
