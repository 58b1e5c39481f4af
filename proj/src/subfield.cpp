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

#include "nihobent/subfield.hpp"

namespace nihobent {

SubfieldEmbedding::SubfieldEmbedding(Field small, Field big)
    : small_(std::move(small)), big_(std::move(big)) {
  const int r = small_.degree();
  const int k = big_.degree();
  if (k % r != 0) {
    fail(ErrorKind::kInvalidArgument, "subfield degree " + std::to_string(r) +
                                          " does not divide " +
                                          std::to_string(k));
  }
  // Root of the small modulus, searched among big-field subfield elements.
  std::optional<Elem> root;
  for (Elem y : subfield_elements(big_, r)) {
    Elem value = 0;
    Elem power = 1;
    for (int i = 0; i <= r; ++i) {
      if ((small_.modulus() >> i) & 1) value ^= power;
      power = big_.mul(power, y);
    }
    if (value == 0) {
      root = y;
      break;
    }
  }
  if (!root) fail(ErrorKind::kInternal, "small modulus has no root");

  std::vector<Elem> basis_image(r);
  Elem power = 1;
  for (int i = 0; i < r; ++i) {
    basis_image[i] = power;
    power = big_.mul(power, *root);
  }
  auto tables = std::make_shared<Tables>();
  tables->forward.resize(small_.size());
  for (Elem x = 0; x < small_.size(); ++x) {
    Elem y = 0;
    for (int i = 0; i < r; ++i) {
      if ((x >> i) & 1) y ^= basis_image[i];
    }
    tables->forward[x] = y;
    tables->backward.emplace(y, x);
  }

  // Additive by construction; multiplicative iff it commutes with powers of
  // the generator.
  const Elem g = small_.generator();
  const Elem g_image = tables->forward[g];
  Elem x = 1;
  Elem y = 1;
  for (std::uint64_t i = 0; i < small_.group_order(); ++i) {
    if (tables->forward[x] != y || !big_.in_subfield(y, r)) {
      fail(ErrorKind::kInternal, "subfield embedding is not a homomorphism");
    }
    x = small_.mul(x, g);
    y = big_.mul(y, g_image);
  }
  if (tables->backward.size() != small_.size()) {
    fail(ErrorKind::kInternal, "subfield embedding is not injective");
  }
  tables_ = std::move(tables);
}

Elem SubfieldEmbedding::project(Elem y) const {
  const auto it = tables_->backward.find(y);
  if (it == tables_->backward.end()) {
    fail(ErrorKind::kNotInSubfield,
         to_hex(y) + " is not in the embedded GF(2^" +
             std::to_string(small_.degree()) + ")");
  }
  return it->second;
}

FieldTower::FieldTower(int m) : FieldTower(Field(m), Field(2 * m)) {}

FieldTower::FieldTower(Field small, Field big)
    : embedding(std::move(small), std::move(big)) {
  if (embedding.big().degree() != 2 * embedding.small().degree()) {
    fail(ErrorKind::kInvalidArgument, "tower must be GF(2^m) in GF(2^{2m})");
  }
}

EvalDomain EvalDomain::standalone(Field small) {
  return EvalDomain(std::move(small));
}

EvalDomain EvalDomain::embedded(SubfieldEmbedding embedding) {
  EvalDomain domain(embedding.small());
  domain.embedding_ = std::move(embedding);
  return domain;
}

const Field& EvalDomain::field() const {
  return embedding_ ? embedding_->big() : small_;
}

const SubfieldEmbedding& EvalDomain::embedding() const {
  if (!embedding_) fail(ErrorKind::kInvalidArgument, "domain is standalone");
  return *embedding_;
}

bool EvalDomain::in_domain_field(Elem x) const {
  return embedding_ ? embedding_->big().in_subfield(x, m())
                    : small_.contains(x);
}

int EvalDomain::trace_m(Elem x) const {
  return embedding_ ? embedding_->big().subfield_trace(x, m())
                    : small_.abs_trace(x);
}

MappingTable EvalDomain::tabulate(const std::function<Elem(Elem)>& fn) const {
  MappingTable table{small_, std::vector<Elem>(small_.size())};
  for (Elem z = 0; z < small_.size(); ++z) {
    table.values[z] = project(fn(lift(z)));
  }
  return table;
}

}  // namespace nihobent
