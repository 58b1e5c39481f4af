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

#include "nihobent/io.hpp"

#include <bit>
#include <cctype>
#include <string>

namespace nihobent {

std::uint64_t parse_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  if (digits.empty() || digits.size() > 16) {
    fail(ErrorKind::kInvalidArgument,
         "expected a hex value, got '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  for (char ch : digits) {
    const int c = std::tolower(static_cast<unsigned char>(ch));
    int v = 0;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else {
      fail(ErrorKind::kInvalidArgument,
           "expected a hex value, got '" + std::string(text) + "'");
    }
    value = (value << 4) | static_cast<std::uint64_t>(v);
  }
  return value;
}

Json to_json(const Field& field) {
  return Json{{"degree", field.degree()},
              {"modulus", to_hex(field.modulus())},
              {"generator", to_hex(field.generator())}};
}

Json to_json(const TraceForm& form) {
  Json terms = Json::array();
  for (const TraceTerm& t : form.terms()) {
    terms.push_back(Json{{"subfield", t.subfield},
                         {"coeff", to_hex(t.coeff)},
                         {"exponent", t.exponent}});
  }
  return terms;
}

Json to_json(const FamilySpec& spec) {
  return Json{{"family", std::string(to_string(spec.family))},
              {"m", spec.m},
              {"a", to_hex(spec.a.bits())},
              {"b", to_hex(spec.b.bits())},
              {"r", spec.r}};
}

Json to_json(const MappingTable& table) {
  Json out = Json::array();
  for (Elem v : table.values) out.push_back(to_hex(v));
  return out;
}

Json to_json(const WalshSpectrum& spectrum) { return Json(spectrum.values); }

Json to_json(const Correspondence& c) {
  Json params{{"member", c.member}, {"w", to_hex(c.w)}, {"e", to_hex(c.e)}};
  if (c.fifth_index) params["fifth_index"] = *c.fifth_index;
  Json inputs{{"u", to_hex(c.u)}};
  inputs[c.family == "adelaide" ? "beta" : "b"] = to_hex(c.input);
  return Json{{"branch", std::string(to_string(c.branch))},
              {"s", c.s ? Json(to_hex(*c.s)) : Json(nullptr)},
              {"c0", to_hex(c.c0)},
              {"c1", to_hex(c.c1)},
              {"catalog",
               Json{{"family", c.family},
                    {"case", c.catalog_case},
                    {"params", params}}},
              {"inputs", inputs},
              {"verified", c.verified},
              {"points_checked", c.points_checked}};
}

Json to_json(const FamilyReport& r) {
  Json out{{"family", std::string(to_string(r.family))},
           {"m", r.m},
           {"exponents", r.exponents},
           {"fifth_power_condition", r.fifth_power_condition},
           {"preconditions_ok", r.preconditions_ok}};
  out["d2"] = r.d2 ? Json(*r.d2) : Json(nullptr);
  out["gcd_d2"] = r.gcd_d2 ? Json(*r.gcd_d2) : Json(nullptr);
  out["fifth_power"] = r.fifth_power ? Json(*r.fifth_power) : Json(nullptr);
  out["expected_degree"] =
      r.expected_degree ? Json(*r.expected_degree) : Json(nullptr);
  if (!r.violation.empty()) out["violation"] = r.violation;
  return out;
}

namespace {

Elem hex_elem(const Json& j, const Field& field, const char* what) {
  if (!j.is_string()) {
    fail(ErrorKind::kInvalidArgument, std::string(what) + " must be a hex string");
  }
  const std::uint64_t v = parse_hex(j.get<std::string>());
  if (v >= field.size()) {
    fail(ErrorKind::kOutOfRange, std::string(what) + " " + to_hex(v) +
                                     " is not an element of " +
                                     field.describe());
  }
  return static_cast<Elem>(v);
}

}  // namespace

TraceForm trace_form_from_json(const Json& j, const Field& field) {
  if (!j.is_array()) fail(ErrorKind::kInvalidArgument, "trace form must be a list");
  std::vector<TraceTerm> terms;
  try {
    for (const Json& t : j) {
      terms.push_back({t.at("subfield").get<int>(),
                       hex_elem(t.at("coeff"), field, "coeff"),
                       t.at("exponent").get<std::uint64_t>()});
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::kInvalidArgument, std::string("bad trace term: ") + e.what());
  }
  return TraceForm(field, std::move(terms));
}

FamilySpec family_spec_from_json(const Json& j, const Field& big) {
  try {
    return FamilySpec{parse_family(j.at("family").get<std::string>()),
                      j.at("m").get<int>(),
                      FieldElement(big, hex_elem(j.at("a"), big, "a")),
                      FieldElement(big, hex_elem(j.at("b"), big, "b")),
                      j.value("r", 0)};
  } catch (const Json::exception& e) {
    fail(ErrorKind::kInvalidArgument, std::string("bad family spec: ") + e.what());
  }
}

MappingTable mapping_table_from_json(const Json& j, const Field& field) {
  if (!j.is_array() || j.size() != field.size()) {
    fail(ErrorKind::kInvalidArgument,
         "mapping table must be a list of " + std::to_string(field.size()) +
             " hex values");
  }
  MappingTable t{field, {}};
  for (const Json& v : j) t.values.push_back(hex_elem(v, field, "value"));
  return t;
}

}  // namespace nihobent
