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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nihobent/class_h.hpp"
#include "nihobent/field.hpp"
#include "nihobent/subfield.hpp"

namespace nihobent {

// Cases of the Subiaco o-polynomial construction.
enum class SubiacoCase {
  kMOdd,      // (i): m odd, w = e = 1
  kMTwoMod4,  // (ii): m = 2 mod 4, w^2 + w + 1 = 0, e = w
  kGeneral,   // (iii): any m, w^2 + w + 1 != 0, tr(1/w) = 1
};

std::string_view to_string(SubiacoCase c);
SubiacoCase parse_subiaco_case(std::string_view text);  // "i", "ii", "iii"

// Elements w, e (and every s passed alongside) live in domain.field().
struct SubiacoParams {
  SubiacoCase kase;
  EvalDomain domain;
  Elem w = 1;
  Elem e = 1;
};

SubiacoParams make_subiaco_params(EvalDomain domain, SubiacoCase kase,
                                  Elem w);
// Every w admissible for the case, as elements of domain.field().
std::vector<Elem> subiaco_admissible_w(const EvalDomain& domain,
                                       SubiacoCase kase);

struct MapPair {
  MappingTable f;
  MappingTable g;
};

MapPair subiaco_fg(const SubiacoParams& p);

// f_s = (f + e s g + s^{1/2} x^{1/2}) / (1 + e s + s^{1/2}).
MappingTable subiaco_fs_defining(const SubiacoParams& p, Elem s);
// Expanded rational forms. For kGeneral the expansion is parameterized by
// s + 1: subiaco_fs_explicit(p, s) == subiaco_fs_defining(p, s + 1).
MappingTable subiaco_fs_explicit(const SubiacoParams& p, Elem s);
// subiaco_fs_defining cross-checked against the explicit form; kInternal on
// mismatch.
MappingTable subiaco_fs(const SubiacoParams& p, Elem s);

// 1 + e s + s^{1/2}; never zero when tr(e) = 1.
Elem subiaco_denominator(const SubiacoParams& p, Elem s);

struct AdelaideParams {
  EvalDomain domain;  // embedded: beta lives in GF(2^{2m})
  Elem beta = 0;
  std::uint64_t l = 0;  // (2^m - 1) / 3
  Elem tr_beta = 0;     // beta + beta^{2^m}
  Elem tr_beta_l = 0;   // beta^l + beta^{l 2^m}
  Elem e = 0;
};

AdelaideParams make_adelaide_params(const SubfieldEmbedding& embedding,
                                    Elem beta);
std::vector<Elem> adelaide_admissible_betas(const SubfieldEmbedding& embedding);

struct AdelaideMaps {
  MappingTable f;
  MappingTable g;
  Elem e = 0;  // standalone GF(2^m)
};

AdelaideMaps adelaide_fg(const AdelaideParams& p);
MappingTable adelaide_fs(const AdelaideParams& p, Elem s);
// f_1 via the general f_s formula, checked against its expanded display.
MappingTable adelaide_f1(const AdelaideParams& p);
// e tr(beta) tr(beta^l) f_1, expanded.
MappingTable adelaide_f1_scaled_display(const AdelaideParams& p);

enum class Branch { kGeneric, kDegenerate };

std::string_view to_string(Branch b);

// Verified claim G(z) = c0 + c1 * member(z). Elements of GF(2^m) (s, c0, c1,
// w, e) are standalone bitmasks; u and the input coefficient are GF(2^{2m}).
struct Correspondence {
  std::string family;        // "subiaco" or "adelaide"
  std::string catalog_case;  // "i", "ii", "iii" or "adelaide"
  std::string member;        // "f_s", "g" or "f_1"
  Branch branch = Branch::kGeneric;
  std::optional<Elem> s;     // f_s parameter in the f_s = (f + esg + ...) form
  Elem c0 = 0;
  Elem c1 = 0;
  Elem w = 0;
  Elem e = 0;
  Elem u = 0;
  Elem input = 0;  // b for subiaco, beta for adelaide
  std::optional<int> fifth_index;
  bool verified = false;
  int points_checked = 0;
  MappingTable extracted_G;
  MappingTable catalog_member;
};

// Default unit-circle choice for m's residue class: cube for m odd, fifth:1
// for m = 2 mod 4, general:0 otherwise.
UnitCircleCase default_unit_circle_case(int m);

// s attached to b for a fixed u, as a GF(2^{2m}) element of the subfield;
// nullopt on the degenerate branch. m odd or m = 2 (mod 4).
std::optional<Elem> subiaco_parameter(const FieldTower& tower, Elem b, Elem u);

// Number of b in GF(2^{2m})^* giving each s (standalone keys) for fixed u.
std::map<Elem, int> subiaco_parameter_counts(const FieldTower& tower, Elem u);

Correspondence correspond_subiaco_fixed_u(const FieldTower& tower, Elem b,
                                          Elem u);
// For m = 2 (mod 4) a degenerate Fifth(j) choice is replaced by the first
// non-degenerate j in 1..4.
Correspondence correspond_subiaco(const FieldTower& tower, Elem b,
                                  UnitCircleCase which);
Correspondence correspond_adelaide(const FieldTower& tower, Elem beta);

}  // namespace nihobent
