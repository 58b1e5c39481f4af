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

#include "nihobent/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace nihobent {

TraceForm::TraceForm(Field field, std::vector<TraceTerm> terms)
    : field_(std::move(field)), terms_(std::move(terms)) {
  const std::uint64_t order = field_.group_order();
  const int n = field_.degree();
  for (TraceTerm& term : terms_) {
    if (term.subfield < 1 || n % term.subfield != 0) {
      fail(ErrorKind::kInvalidArgument,
           "term subfield degree " + std::to_string(term.subfield) +
               " does not divide " + std::to_string(n));
    }
    if (!field_.contains(term.coeff) ||
        !field_.in_subfield(term.coeff, term.subfield)) {
      fail(ErrorKind::kNotInSubfield,
           "coefficient " + to_hex(term.coeff) + " is outside GF(2^" +
               std::to_string(term.subfield) + ")");
    }
    term.exponent %= order;
    // x^e lies in GF(2^r) for every x iff e * 2^r = e (mod 2^n - 1).
    const std::uint64_t shifted =
        static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(term.exponent) << term.subfield) %
            order);
    if (shifted != term.exponent) {
      fail(ErrorKind::kInvalidArgument,
           "exponent " + std::to_string(term.exponent) +
               " does not map into GF(2^" + std::to_string(term.subfield) +
               ")");
    }
  }
}

TruthTable TruthTable::zeros(int n) {
  return {n, std::vector<std::uint8_t>(std::size_t{1} << n, 0)};
}

std::size_t TruthTable::weight() const {
  std::size_t w = 0;
  for (auto b : bits) w += b;
  return w;
}

TruthTable eval_trace_form(const TraceForm& form) {
  const Field& field = form.field();
  TruthTable table = TruthTable::zeros(field.degree());
  for (Elem x = 0; x < field.size(); ++x) {
    int bit = 0;
    for (const TraceTerm& term : form.terms()) {
      const Elem value = field.mul(term.coeff, field.pow(x, term.exponent));
      bit ^= field.subfield_trace(value, term.subfield);
    }
    table.bits[x] = static_cast<std::uint8_t>(bit);
  }
  return table;
}

void fast_walsh_hadamard(std::span<std::int64_t> a) {
  for (std::size_t half = 1; half < a.size(); half <<= 1) {
    for (std::size_t block = 0; block < a.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t x = a[i];
        const std::int64_t y = a[i + half];
        a[i] = x + y;
        a[i + half] = x - y;
      }
    }
  }
}

namespace {

std::vector<std::int64_t> coordinate_spectrum(const TruthTable& f) {
  std::vector<std::int64_t> a(f.bits.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.bits[i] ? -1 : 1;
  fast_walsh_hadamard(a);
  return a;
}

}  // namespace

WalshSpectrum walsh_spectrum(const TruthTable& f, const Field& field) {
  if (field.degree() != f.n) {
    fail(ErrorKind::kFieldMismatch, "truth table has n=" +
                                        std::to_string(f.n) + " but field " +
                                        field.describe());
  }
  const auto coords = coordinate_spectrum(f);
  // tr(w x) = sum_j x_j tr(w X^j): the coordinate index paired with w has
  // bit j equal to tr(w X^j).
  WalshSpectrum spectrum{f.n, std::vector<std::int64_t>(coords.size())};
  for (Elem w = 0; w < field.size(); ++w) {
    Elem index = 0;
    for (int j = 0; j < f.n; ++j) {
      index |= static_cast<Elem>(field.abs_trace(field.mul(w, Elem{1} << j)))
               << j;
    }
    spectrum.values[w] = coords[index];
  }
  return spectrum;
}

bool is_bent(const WalshSpectrum& spectrum) {
  if (spectrum.n % 2 != 0) {
    fail(ErrorKind::kDomain, "bentness needs an even number of variables");
  }
  const std::int64_t magnitude = std::int64_t{1} << (spectrum.n / 2);
  for (std::int64_t v : spectrum.values) {
    if (v != magnitude && v != -magnitude) return false;
  }
  return true;
}

bool is_bent(const TruthTable& f) {
  if (f.n % 2 != 0) {
    fail(ErrorKind::kDomain, "bentness needs an even number of variables");
  }
  return is_bent(WalshSpectrum{f.n, coordinate_spectrum(f)});
}

std::vector<std::uint8_t> moebius_transform(std::vector<std::uint8_t> bits) {
  for (std::size_t half = 1; half < bits.size(); half <<= 1) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (i & half) bits[i] ^= bits[i ^ half];
    }
  }
  return bits;
}

int anf_degree(const TruthTable& f) {
  const auto anf = moebius_transform(f.bits);
  int degree = 0;
  for (std::size_t i = 0; i < anf.size(); ++i) {
    if (anf[i]) degree = std::max(degree, std::popcount(i));
  }
  return degree;
}

bool niho_restriction_check(const TruthTable& f, const Field& field, int m) {
  if (f.n % 2 != 0 || f.n != 2 * m) {
    fail(ErrorKind::kDomain, "restriction check needs n = 2m");
  }
  if (field.degree() != f.n) {
    fail(ErrorKind::kFieldMismatch, "field degree differs from n");
  }
  // GF(2)-basis of the subfield GF(2^m).
  std::vector<Elem> basis;
  std::vector<Elem> reduced;  // echelon copies for independence tests
  for (Elem x : subfield_elements(field, m)) {
    Elem r = x;
    for (Elem b : reduced) r = std::min(r, r ^ b);
    if (r != 0) {
      basis.push_back(x);
      reduced.push_back(r);
      std::sort(reduced.begin(), reduced.end(), std::greater<>());
    }
    if (static_cast<int>(basis.size()) == m) break;
  }

  // Cosets of GF(2^m)^* in GF(2^n)^* are g^i GF(2^m)^*, 0 <= i <= 2^m.
  const std::uint8_t at_zero = f.bits[0];
  const std::uint64_t cosets = (std::uint64_t{1} << m) + 1;
  Elem u = 1;
  std::vector<Elem> scaled(m);
  std::vector<std::uint8_t> slope(m);
  for (std::uint64_t i = 0; i < cosets; ++i) {
    for (int j = 0; j < m; ++j) {
      scaled[j] = field.mul(u, basis[j]);
      slope[j] = f.bits[scaled[j]] ^ at_zero;
    }
    // Gray-code walk over the coset: point = u * lambda, value predicted by
    // the affine extension from the basis.
    Elem point = 0;
    std::uint8_t predicted = at_zero;
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << m); ++c) {
      const int j = std::countr_zero(c);
      point ^= scaled[j];
      predicted ^= slope[j];
      if (f.bits[point] != predicted) return false;
    }
    u = field.mul(u, field.generator());
  }
  return true;
}

std::string format_truth_table(const TruthTable& f) {
  std::string out = "n=" + std::to_string(f.n) + "\n";
  out.reserve(out.size() + f.bits.size() + 1);
  for (auto b : f.bits) out.push_back(b ? '1' : '0');
  out.push_back('\n');
  return out;
}

TruthTable parse_truth_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::string body;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
    fail(ErrorKind::kInvalidArgument, "truth table must start with 'n=<int>'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(header.substr(2), &used);
    if (used + 2 != header.size()) throw std::invalid_argument(header);
  } catch (const std::exception&) {
    fail(ErrorKind::kInvalidArgument, "bad truth table header: " + header);
  }
  if (n < 1 || n > kMaxDegree) {
    fail(ErrorKind::kOutOfRange, "truth table n out of range");
  }
  std::getline(in, body);
  if (!body.empty() && body.back() == '\r') body.pop_back();
  TruthTable table = TruthTable::zeros(n);
  if (body.size() != table.bits.size()) {
    fail(ErrorKind::kInvalidArgument,
         "truth table body has " + std::to_string(body.size()) +
             " entries, expected " + std::to_string(table.bits.size()));
  }
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1') {
      fail(ErrorKind::kInvalidArgument, "truth table entries must be 0 or 1");
    }
    table.bits[i] = body[i] == '1';
  }
  return table;
}

TruthTable read_truth_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidArgument, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_truth_table(buffer.str());
}

void write_truth_table(const TruthTable& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  out << format_truth_table(f);
}

}  // namespace nihobent
