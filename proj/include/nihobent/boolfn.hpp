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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nihobent/field.hpp"

namespace nihobent {

// One summand tr_r(coeff * x^exponent) of a univariate trace form. The
// coefficient lies in the subfield GF(2^r) of the ambient field, and so
// does x^exponent.
struct TraceTerm {
  int subfield = 0;
  Elem coeff = 0;
  std::uint64_t exponent = 0;

  friend bool operator==(const TraceTerm&, const TraceTerm&) = default;
};

class TraceForm {
 public:
  TraceForm(Field field, std::vector<TraceTerm> terms);

  const Field& field() const { return field_; }
  const std::vector<TraceTerm>& terms() const { return terms_; }

 private:
  Field field_;
  std::vector<TraceTerm> terms_;
};

struct TruthTable {
  int n = 0;
  std::vector<std::uint8_t> bits;  // bits[i] = f(element with bitmask i)

  static TruthTable zeros(int n);
  std::size_t weight() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;  // values[w] = sum_x (-1)^{f(x)+tr(wx)}
};

TruthTable eval_trace_form(const TraceForm& form);

// In-place Walsh-Hadamard butterfly: a[y] <- sum_x (-1)^{<x,y>} a[x] with the
// coordinate dot product.
void fast_walsh_hadamard(std::span<std::int64_t> a);

// Exact spectrum under the trace pairing of `field` (which must have degree
// f.n).
WalshSpectrum walsh_spectrum(const TruthTable& f, const Field& field);

// Bentness does not depend on the pairing, so no field is needed.
bool is_bent(const TruthTable& f);
bool is_bent(const WalshSpectrum& spectrum);

// Binary Moebius transform (ANF coefficients <-> truth table); an involution.
std::vector<std::uint8_t> moebius_transform(std::vector<std::uint8_t> bits);

// Degree of the algebraic normal form; 0 for constants.
int anf_degree(const TruthTable& f);

// True iff f is affine on every coset u*GF(2^m) of GF(2^n), n = 2m.
bool niho_restriction_check(const TruthTable& f, const Field& field, int m);

// File format: "n=<int>\n" followed by 2^n characters of 0/1.
std::string format_truth_table(const TruthTable& f);
TruthTable parse_truth_table(std::string_view text);
TruthTable read_truth_table(const std::filesystem::path& path);
void write_truth_table(const TruthTable& f, const std::filesystem::path& path);

}  // namespace nihobent
