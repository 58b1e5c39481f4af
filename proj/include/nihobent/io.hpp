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
#include <string_view>

#include <json.hpp>

#include "nihobent/boolfn.hpp"
#include "nihobent/field.hpp"
#include "nihobent/niho.hpp"
#include "nihobent/ovals.hpp"
#include "nihobent/subfield.hpp"

namespace nihobent {

using Json = nlohmann::json;

// Accepts "0x1f" or "1f" in either case; kInvalidArgument otherwise.
std::uint64_t parse_hex(std::string_view text);

Json to_json(const Field& field);
Json to_json(const TraceForm& form);
Json to_json(const FamilySpec& spec);
Json to_json(const MappingTable& table);
Json to_json(const WalshSpectrum& spectrum);
Json to_json(const Correspondence& c);
Json to_json(const FamilyReport& report);

TraceForm trace_form_from_json(const Json& j, const Field& field);
FamilySpec family_spec_from_json(const Json& j, const Field& big);
// Exactly field.size() hex values.
MappingTable mapping_table_from_json(const Json& j, const Field& field);

}  // namespace nihobent
