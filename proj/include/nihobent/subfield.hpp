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

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "nihobent/field.hpp"

namespace nihobent {

// Field homomorphism GF(2^r) -> GF(2^k), r | k. The image of the small
// field's polynomial-basis root X is the smallest-bitmask root of the small
// modulus in the big field. Verified on construction.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(Field small, Field big);

  const Field& small() const { return small_; }
  const Field& big() const { return big_; }

  Elem lift(Elem x) const { return tables_->forward.at(x); }
  // Inverse of lift on the image; kNotInSubfield otherwise.
  Elem project(Elem y) const;
  std::span<const Elem> image() const { return tables_->forward; }

 private:
  struct Tables {
    std::vector<Elem> forward;
    std::unordered_map<Elem, Elem> backward;
  };

  Field small_;
  Field big_;
  std::shared_ptr<const Tables> tables_;
};

// Helper pairing GF(2^{2m}) with its standalone GF(2^m) and the embedding.
struct FieldTower {
  explicit FieldTower(int m);
  FieldTower(Field small, Field big);

  int m() const { return embedding.small().degree(); }
  int n() const { return embedding.big().degree(); }
  const Field& small() const { return embedding.small(); }
  const Field& big() const { return embedding.big(); }

  SubfieldEmbedding embedding;
};

// A map GF(2^m) -> GF(2^m); values[z] is the image of the element with
// bitmask z in `field`.
struct MappingTable {
  Field field;
  std::vector<Elem> values;

  int m() const { return field.degree(); }
  Elem operator[](Elem z) const { return values[z]; }

  friend bool operator==(const MappingTable& a, const MappingTable& b) {
    return a.field == b.field && a.values == b.values;
  }
};

// Where maps on GF(2^m) are evaluated: in GF(2^m) itself, or on its copy
// inside a larger field. Points are always indexed by the standalone
// GF(2^m) bitmask.
class EvalDomain {
 public:
  static EvalDomain standalone(Field small);
  static EvalDomain embedded(SubfieldEmbedding embedding);

  // Field whose arithmetic evaluates the map.
  const Field& field() const;
  const Field& small() const { return small_; }
  int m() const { return small_.degree(); }
  bool is_embedded() const { return embedding_.has_value(); }
  const SubfieldEmbedding& embedding() const;

  Elem lift(Elem z) const { return embedding_ ? embedding_->lift(z) : z; }
  Elem project(Elem x) const {
    return embedding_ ? embedding_->project(x) : x;
  }
  bool in_domain_field(Elem x) const;
  // Absolute trace of GF(2^m) of an element of the domain field.
  int trace_m(Elem x) const;

  MappingTable tabulate(const std::function<Elem(Elem)>& fn) const;

 private:
  explicit EvalDomain(Field small) : small_(std::move(small)) {}

  Field small_;
  std::optional<SubfieldEmbedding> embedding_;
};

}  // namespace nihobent
