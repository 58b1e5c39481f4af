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

#include "nihobent/class_h.hpp"

namespace nihobent {

namespace {

// Element of `small` whose trace pairing reproduces `bit_of(x)` on the
// polynomial basis.
template <typename BitFn>
Elem solve_trace_functional(const Field& small, BitFn bit_of) {
  const auto dual = small.trace_dual_basis();
  Elem h = 0;
  for (int i = 0; i < small.degree(); ++i) {
    if (bit_of(Elem{1} << i)) h ^= dual[i];
  }
  return h;
}

Elem relative_trace_m(const Field& big, int m, Elem x) {
  return x ^ big.frobenius(x, m);
}

}  // namespace

BasisPair make_basis(const Field& big, int m, Elem u, Elem v) {
  if (big.degree() != 2 * m) {
    fail(ErrorKind::kFieldMismatch, "basis needs GF(2^{2m})");
  }
  if (!big.contains(u) || !big.contains(v)) {
    fail(ErrorKind::kOutOfRange, "basis element outside the field");
  }
  if (v == 0 || big.in_subfield(big.div(u, v), m)) {
    fail(ErrorKind::kBasisDependent,
         "(" + to_hex(u) + ", " + to_hex(v) +
             ") is not a basis over GF(2^" + std::to_string(m) + ")");
  }
  return {u, v};
}

BivariateTable to_bivariate(const TruthTable& f, const BasisPair& basis,
                            const SubfieldEmbedding& embedding) {
  const Field& big = embedding.big();
  const int m = embedding.small().degree();
  if (f.n != big.degree()) {
    fail(ErrorKind::kFieldMismatch, "truth table size differs from GF(2^n)");
  }
  make_basis(big, m, basis.u, basis.v);
  const Elem q = embedding.small().size();
  std::vector<Elem> ux(q), vy(q);
  for (Elem x = 0; x < q; ++x) {
    ux[x] = big.mul(basis.u, embedding.lift(x));
    vy[x] = big.mul(basis.v, embedding.lift(x));
  }
  BivariateTable g{m, std::vector<std::uint8_t>(std::size_t{q} * q)};
  for (Elem x = 0; x < q; ++x) {
    for (Elem y = 0; y < q; ++y) {
      g.bits[(x << m) | y] = f.bits[ux[x] ^ vy[y]];
    }
  }
  return g;
}

ClassHForm extract_H_mu(const BivariateTable& g, const Field& small) {
  const int m = small.degree();
  if (g.m != m) fail(ErrorKind::kFieldMismatch, "bivariate table size");
  const Elem q = small.size();

  const Elem mu =
      solve_trace_functional(small, [&](Elem y) { return g.at(0, y); });
  for (Elem y = 0; y < q; ++y) {
    if (g.at(0, y) != small.abs_trace(small.mul(mu, y))) {
      throw NotClassHError(std::nullopt,
                           "g(0, y) is not linear in y");
    }
  }

  MappingTable H{small, std::vector<Elem>(q)};
  for (Elem z = 0; z < q; ++z) {
    const auto line = [&](Elem x) { return g.at(x, small.mul(x, z)); };
    const Elem h = solve_trace_functional(small, line);
    for (Elem x = 0; x < q; ++x) {
      if (line(x) != small.abs_trace(small.mul(x, h))) {
        throw NotClassHError(z, "g(x, xz) is not linear in x for z = " +
                                    to_hex(z));
      }
    }
    H.values[z] = h;
  }
  return {std::move(H), mu};
}

MappingTable G_from_H(const MappingTable& H, Elem mu) {
  MappingTable G = H;
  for (Elem z = 0; z < G.values.size(); ++z) {
    G.values[z] ^= H.field.mul(mu, z);
  }
  return G;
}

MappingTable extract_G(const TruthTable& f, const BasisPair& basis,
                       const SubfieldEmbedding& embedding) {
  const auto form =
      extract_H_mu(to_bivariate(f, basis, embedding), embedding.small());
  return G_from_H(form.H, form.mu);
}

bool is_permutation(const MappingTable& t) {
  std::vector<std::uint8_t> seen(t.values.size(), 0);
  for (Elem v : t.values) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_two_to_one(const MappingTable& t) {
  std::vector<std::uint32_t> count(t.values.size(), 0);
  for (Elem v : t.values) ++count[v];
  for (auto c : count) {
    if (c != 0 && c != 2) return false;
  }
  return true;
}

OPolyReport opolynomial_report(const MappingTable& G) {
  const Field& field = G.field;
  const Elem q = field.size();
  OPolyReport report;
  report.is_permutation = is_permutation(G);
  report.is_opolynomial = true;
  std::vector<std::uint32_t> count(q);
  for (Elem beta = 1; beta < q && report.is_opolynomial; ++beta) {
    std::fill(count.begin(), count.end(), 0);
    for (Elem z = 0; z < q; ++z) ++count[G.values[z] ^ field.mul(beta, z)];
    for (auto c : count) {
      if (c != 0 && c != 2) {
        report.is_opolynomial = false;
        break;
      }
    }
  }
  if (report.is_opolynomial && !report.is_permutation) {
    fail(ErrorKind::kInternal,
         "2-to-1 condition holds but G is not a permutation");
  }
  return report;
}

bool is_opolynomial(const MappingTable& G) {
  return opolynomial_report(G).is_opolynomial;
}

MappingTable opoly_normalize(const MappingTable& G) {
  const Field& field = G.field;
  if (G.values.size() < 2 || G.values[0] == G.values[1]) {
    fail(ErrorKind::kDomain, "cannot normalize: G(0) = G(1)");
  }
  const Elem shift = G.values[0];
  const Elem scale = field.inv(G.values[1] ^ G.values[0]);
  MappingTable out = G;
  for (Elem& v : out.values) v = field.mul(v ^ shift, scale);
  return out;
}

namespace {

void check_binomial3_coefficients(const Field& big, int m, Elem a, Elem b) {
  if (a == 0 || b == 0) fail(ErrorKind::kZeroCoefficient, "a, b nonzero");
  if (big.pow(b, (std::uint64_t{1} << m) + 1) != a) {
    fail(ErrorKind::kCoefficientRelation, "a must equal b^{2^m+1}");
  }
}

}  // namespace

MappingTable closed_form_G(const SubfieldEmbedding& embedding, Elem a, Elem b,
                           const BasisPair& basis) {
  const Field& big = embedding.big();
  const int m = embedding.small().degree();
  check_binomial3_coefficients(big, m, a, b);
  make_basis(big, m, basis.u, basis.v);
  const Elem u = basis.u;
  const Elem v = basis.v;
  const std::uint64_t q = std::uint64_t{1} << m;
  const auto T = [&](Elem x) { return relative_trace_m(big, m, x); };

  const Elem sqrt_a = big.sqrt(a);
  const Elem u_conj = big.frobenius(u, m);
  const Elem u_norm_half = big.sqrt(big.pow(u, q + 1));
  const Elem v_pow = big.pow(v, 2 * (q - 1));
  const Elem u_pow = big.pow(u, 2 * (q - 1));
  const Elem c = big.mul(sqrt_a, u_norm_half) ^
                 T(big.mul(b, big.mul(u_conj, v_pow)));
  const Elem linear = big.mul(sqrt_a, big.sqrt(T(big.mul(u_conj, v))));
  const Elem rational_coeff =
      big.mul(b, big.mul(big.square(u), u_pow ^ v_pow));

  const EvalDomain domain = EvalDomain::embedded(embedding);
  return domain.tabulate([&](Elem z) {
    const Elem tail = big.mul(rational_coeff, big.pow(u ^ big.mul(v, z), q - 2));
    return c ^ big.mul(linear, big.sqrt(z)) ^ T(tail);
  });
}

MappingTable closed_form_G_unit_circle(const SubfieldEmbedding& embedding,
                                       Elem a, Elem b, Elem u) {
  const Field& big = embedding.big();
  const int m = embedding.small().degree();
  check_binomial3_coefficients(big, m, a, b);
  const std::uint64_t q = std::uint64_t{1} << m;
  if (big.pow(u, q + 1) != 1 || big.in_subfield(u, m)) {
    fail(ErrorKind::kInvalidParams, "u must be on the unit circle, u != 1");
  }
  const auto T = [&](Elem x) { return relative_trace_m(big, m, x); };
  const Elem w = T(u);
  const Elem w2 = big.square(w);
  const Elem b_conj = big.frobenius(b, m);
  const Elem u4 = big.pow(u, 4);
  const Elem u5 = big.pow(u, 5);
  const Elem t_b = T(b);
  const Elem t_u5 = T(big.mul(b_conj, u5));
  const Elem t_u5u = T(big.mul(b_conj, u5 ^ u));
  const Elem t_u41 = T(big.mul(b_conj, u4 ^ 1));
  const Elem constant = big.sqrt(a) ^ t_u5;
  const Elem aw = big.mul(a, w);

  const EvalDomain domain = EvalDomain::embedded(embedding);
  return domain.tabulate([&](Elem z) {
    const Elem z2 = big.square(z);
    const Elem num = big.mul(t_u5u, big.square(z2)) ^
                     big.mul(big.mul(t_b, w2), big.mul(z2, z)) ^
                     big.mul(big.mul(t_u5, w2), z2) ^ big.mul(t_u41, z);
    const Elem den = big.square(z2 ^ big.mul(w, z) ^ 1);
    return constant ^ big.sqrt(big.mul(aw, z)) ^ big.div(num, den);
  });
}

IdentityCheck check_identities(const SubfieldEmbedding& embedding, Elem b,
                               Elem u, Elem w) {
  const Field& big = embedding.big();
  const int m = embedding.small().degree();
  const std::uint64_t q = std::uint64_t{1} << m;
  if (big.pow(u, q + 1) != 1 || big.in_subfield(u, m)) {
    fail(ErrorKind::kInvalidParams, "u must be on the unit circle, u != 1");
  }
  if (w != relative_trace_m(big, m, u)) {
    fail(ErrorKind::kInvalidParams, "w must equal u + u^{2^m}");
  }
  const auto T = [&](Elem x) { return relative_trace_m(big, m, x); };
  const auto mul = [&](Elem x, Elem y) { return big.mul(x, y); };
  const Elem bb = b ^ big.frobenius(b, m);
  const Elem b_conj = big.frobenius(b, m);
  const Elem w2 = big.square(w);
  const Elem u2 = big.square(u);
  const Elem u3 = mul(u2, u);
  const Elem u4 = big.square(u2);
  const Elem u5 = mul(u4, u);
  const Elem t_u5u = T(mul(b_conj, u5 ^ u));

  IdentityCheck check;
  check.first = (mul(mul(w2, bb), u3) ^ mul(mul(b, mul(w2, w)), 1 ^ w2)) ==
                t_u5u;
  check.second = (mul(u, bb) ^ mul(b, w) ^ t_u5u) == T(mul(b_conj, u5));
  check.third = (mul(mul(w2, bb), u2) ^ mul(b, big.square(w2))) ==
                T(mul(b_conj, u4 ^ 1));

  const Elem a = big.pow(b, q + 1);
  const Elem sqrt_a = big.sqrt(a);
  const Elem u_norm_half = big.sqrt(big.pow(u, q + 1));
  const Elem u_pow = big.pow(u, 2 * (q - 1));
  const std::uint64_t d2 = 3 * (q - 1) + 1;
  check.aux = true;
  check.expansion = true;
  for (Elem zs = 0; zs < q; ++zs) {
    const Elem z = embedding.lift(zs);
    const Elem lhs = mul(sqrt_a, z) ^ mul(sqrt_a, big.sqrt(big.pow(u ^ z, q + 1)));
    const Elem rhs = mul(sqrt_a, u_norm_half) ^
                     mul(sqrt_a, mul(big.sqrt(w), big.sqrt(z)));
    check.aux = check.aux && lhs == rhs;

    const Elem direct = big.pow(u ^ z, d2);
    const Elem rewritten = big.pow(u, q) ^
                           mul(mul(u2, u_pow ^ 1), big.pow(u ^ z, q - 2)) ^ z;
    check.expansion = check.expansion && direct == rewritten;
  }
  return check;
}

bool verify_identities(const SubfieldEmbedding& embedding, Elem b, Elem u,
                       Elem w) {
  return check_identities(embedding, b, u, w).all();
}

}  // namespace nihobent
