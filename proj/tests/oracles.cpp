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

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace oracle {

namespace {

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  return r;
}

int degree_of(std::uint64_t p) {
  int d = -1;
  while (p >> (d + 1)) ++d;
  return d;
}

}  // namespace

std::vector<std::uint32_t> irreducibles_by_sieve(int k) {
  const std::uint32_t lo = std::uint32_t{1} << k;
  std::vector<bool> reducible(lo, false);
  for (int da = 1; da <= k / 2; ++da) {
    const int db = k - da;
    for (std::uint64_t a = std::uint64_t{1} << da; a < (std::uint64_t{2} << da); ++a) {
      for (std::uint64_t b = std::uint64_t{1} << db; b < (std::uint64_t{2} << db); ++b) {
        reducible[clmul(a, b) - lo] = true;
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < lo; ++i) {
    if (!reducible[i]) out.push_back(lo + i);
  }
  return out;
}

Elem NaiveField::mul(Elem x, Elem y) const {
  std::uint64_t p = clmul(x, y);
  for (int d = degree_of(p); d >= k; --d) {
    if ((p >> d) & 1) p ^= std::uint64_t{modulus} << (d - k);
  }
  return static_cast<Elem>(p);
}

Elem NaiveField::pow(Elem x, std::uint64_t e) const {
  Elem r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

Elem NaiveField::inv(Elem x) const {
  for (Elem y = 1; y < size(); ++y) {
    if (mul(x, y) == 1) return y;
  }
  return 0;
}

int NaiveField::trace(Elem x) const {
  Elem acc = 0;
  Elem c = x;
  for (int i = 0; i < k; ++i) {
    acc ^= c;
    c = mul(c, c);
  }
  return static_cast<int>(acc);
}

Elem NaiveField::sqrt(Elem x) const {
  for (Elem y = 0; y < size(); ++y) {
    if (mul(y, y) == x) return y;
  }
  return 0;
}

NaiveField naive(const nihobent::Field& f) {
  return {f.degree(), f.modulus()};
}

std::vector<std::int64_t> naive_walsh(const nihobent::TruthTable& f,
                                      const NaiveField& field) {
  std::vector<std::int64_t> out(field.size());
  for (Elem w = 0; w < field.size(); ++w) {
    std::int64_t sum = 0;
    for (Elem x = 0; x < field.size(); ++x) {
      sum += ((f.bits[x] ^ field.trace(field.mul(w, x))) & 1) ? -1 : 1;
    }
    out[w] = sum;
  }
  return out;
}

int naive_anf_degree(const nihobent::TruthTable& f) {
  int best = 0;
  const std::uint32_t size = std::uint32_t{1} << f.n;
  for (std::uint32_t u = 0; u < size; ++u) {
    int coeff = 0;
    // Enumerate subsets of u.
    for (std::uint32_t x = u;; x = (x - 1) & u) {
      coeff ^= f.bits[x];
      if (x == 0) break;
    }
    if (coeff) best = std::max(best, std::popcount(u));
  }
  return best;
}

nihobent::TruthTable naive_trace_form(const nihobent::TraceForm& form) {
  const NaiveField field = naive(form.field());
  nihobent::TruthTable t = nihobent::TruthTable::zeros(field.k);
  for (Elem x = 0; x < field.size(); ++x) {
    int bit = 0;
    for (const auto& term : form.terms()) {
      // Square-and-multiply on the naive multiplier for speed.
      Elem p = 1;
      Elem base = x;
      for (std::uint64_t e = term.exponent; e; e >>= 1) {
        if (e & 1) p = field.mul(p, base);
        base = field.mul(base, base);
      }
      Elem y = field.mul(term.coeff, p);
      // Absolute trace of GF(2^r): sum of y^{2^i}, i < r.
      Elem acc = 0;
      for (int i = 0; i < term.subfield; ++i) {
        acc ^= y;
        y = field.mul(y, y);
      }
      bit ^= static_cast<int>(acc);
    }
    t.bits[x] = static_cast<std::uint8_t>(bit & 1);
  }
  return t;
}

bool is_hyperoval(const std::vector<Elem>& G, const NaiveField& field) {
  using Point = std::array<Elem, 3>;
  std::vector<Point> pts;
  for (Elem t = 0; t < field.size(); ++t) pts.push_back({1, t, G[t]});
  pts.push_back({0, 1, 0});
  pts.push_back({0, 0, 1});
  const auto det = [&](const Point& a, const Point& b, const Point& c) {
    const auto m = [&](Elem x, Elem y) { return field.mul(x, y); };
    return m(a[0], m(b[1], c[2]) ^ m(b[2], c[1])) ^
           m(a[1], m(b[0], c[2]) ^ m(b[2], c[0])) ^
           m(a[2], m(b[0], c[1]) ^ m(b[1], c[0]));
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        if (det(pts[i], pts[j], pts[l]) == 0) return false;
      }
    }
  }
  return true;
}

bool brute_class_h(const std::vector<std::uint8_t>& g_bits, int m,
                   const NaiveField& small, std::vector<Elem>& H, Elem& mu) {
  const Elem q = small.size();
  const auto g = [&](Elem x, Elem y) { return g_bits[(x << m) | y]; };
  bool found_mu = false;
  for (Elem c = 0; c < q && !found_mu; ++c) {
    bool ok = g(0, 0) == 0;
    for (Elem y = 0; y < q && ok; ++y) ok = g(0, y) == small.trace(small.mul(c, y));
    if (ok) {
      mu = c;
      found_mu = true;
    }
  }
  if (!found_mu) return false;
  H.assign(q, 0);
  for (Elem z = 0; z < q; ++z) {
    bool found = false;
    for (Elem h = 0; h < q && !found; ++h) {
      bool ok = true;
      for (Elem x = 1; x < q && ok; ++x) {
        ok = g(x, small.mul(x, z)) == small.trace(small.mul(x, h));
      }
      if (ok) {
        H[z] = h;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Elem> sample_nonzero(std::uint32_t size, std::size_t count,
                                 std::uint64_t seed) {
  std::vector<Elem> all(size - 1);
  std::iota(all.begin(), all.end(), Elem{1});
  if (count >= all.size()) return all;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace oracle
