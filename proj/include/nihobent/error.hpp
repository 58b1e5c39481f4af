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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nihobent {

enum class ErrorKind {
  kFieldMismatch,
  kDomain,
  kOutOfRange,
  kInvalidArgument,
  kNotNihoExponent,
  kParity,
  kZeroCoefficient,
  kCoefficientRelation,
  kNotInSubfield,
  kNotFifthPower,
  kInvalidR,
  kTraceCondition,
  kBasisDependent,
  kNotClassH,
  kInvalidParams,
  kUnsupported,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a bivariate table is not of the class-H shape. `coset()` is
// the offending z (the line y = xz), or nullopt for the x = 0 line.
class NotClassHError : public Error {
 public:
  NotClassHError(std::optional<std::uint32_t> coset, const std::string& what)
      : Error(ErrorKind::kNotClassH, what), coset_(coset) {}

  std::optional<std::uint32_t> coset() const { return coset_; }

 private:
  std::optional<std::uint32_t> coset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace nihobent
