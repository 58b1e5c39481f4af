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
#include <vector>

#include "nihobent/boolfn.hpp"
#include "nihobent/field.hpp"
#include "nihobent/subfield.hpp"

namespace nihobent {

// (u, v): a basis of GF(2^{2m}) over GF(2^m).
struct BasisPair {
  Elem u = 0;
  Elem v = 1;
};

// Validates GF(2^m)-independence (v != 0 and u/v outside GF(2^m)).
BasisPair make_basis(const Field& big, int m, Elem u, Elem v);

// g(x, y) on GF(2^m) x GF(2^m), indexed by standalone bitmasks.
struct BivariateTable {
  int m = 0;
  std::vector<std::uint8_t> bits;  // bits[(x << m) | y]

  std::uint8_t at(Elem x, Elem y) const { return bits[(x << m) | y]; }
};

// g(x, y) = f(u*x + v*y) with x, y lifted through the embedding.
BivariateTable to_bivariate(const TruthTable& f, const BasisPair& basis,
                            const SubfieldEmbedding& embedding);

struct ClassHForm {
  MappingTable H;
  Elem mu = 0;
};

// Recovers g(x, y) = tr(x H(y/x)) for x != 0 and tr(mu y) for x = 0.
// Throws NotClassHError when either restriction is not linear.
ClassHForm extract_H_mu(const BivariateTable& g, const Field& small);

MappingTable G_from_H(const MappingTable& H, Elem mu);

// extract_H_mu(to_bivariate(f)) followed by G_from_H.
MappingTable extract_G(const TruthTable& f, const BasisPair& basis,
                       const SubfieldEmbedding& embedding);

bool is_permutation(const MappingTable& t);
// Every fiber has 0 or 2 elements.
bool is_two_to_one(const MappingTable& t);

struct OPolyReport {
  bool is_opolynomial = false;
  bool is_permutation = false;
};

// z -> G(z) + beta z is 2-to-1 for every beta != 0. Raises kInternal if G
// passes but is not a permutation.
OPolyReport opolynomial_report(const MappingTable& G);
bool is_opolynomial(const MappingTable& G);

// (G(z) + G(0)) / (G(1) + G(0)); kDomain when G(0) = G(1).
MappingTable opoly_normalize(const MappingTable& G);

// Closed form of G for the Binomial3 function tr_m(a t^{2^m+1}) +
// tr_n(b t^{3(2^m-1)+1}) and an arbitrary basis (u, v). a and b are big-field
// elements with a = b^{2^m+1} != 0.
MappingTable closed_form_G(const SubfieldEmbedding& embedding, Elem a, Elem b,
                           const BasisPair& basis);

// The same G for v = 1 and u on the unit circle, as a single rational
// function of z with denominator (z^2 + wz + 1)^2, w = u + u^{2^m}.
MappingTable closed_form_G_unit_circle(const SubfieldEmbedding& embedding,
                                       Elem a, Elem b, Elem u);

struct IdentityCheck {
  bool aux = false;        // sqrt expansion of (u+z)^{(2^m+1)/2}, all z
  bool expansion = false;  // (u+z)^{3(2^m-1)+1} rewritten, all z
  bool first = false;      // w^2(b+b')u^3 + b w^3(1+w^2) = T(b'(u^5+u))
  bool second = false;     // u(b+b') + bw + T(b'(u^5+u)) = T(b' u^5)
  bool third = false;      // w^2(b+b')u^2 + b w^4 = T(b'(u^4+1))

  bool all() const { return aux && expansion && first && second && third; }
};

// b' = b^{2^m}, T = relative trace to GF(2^m). Requires u^{2^m+1} = 1,
// u outside GF(2^m) and w = u + u^{2^m}.
IdentityCheck check_identities(const SubfieldEmbedding& embedding, Elem b,
                               Elem u, Elem w);
bool verify_identities(const SubfieldEmbedding& embedding, Elem b, Elem u,
                       Elem w);

}  // namespace nihobent
