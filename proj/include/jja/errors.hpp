// Copyright 2026 The jjalg developers
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

#include <stdexcept>
#include <string>

namespace jja {

/// Base class for all jjalg errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define JJA_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                          \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

JJA_DEFINE_ERROR(FieldMismatch);
JJA_DEFINE_ERROR(DivisionByZero);
JJA_DEFINE_ERROR(NotEnumerable);
JJA_DEFINE_ERROR(NonPrimeModulus);
JJA_DEFINE_ERROR(DimensionMismatch);
JJA_DEFINE_ERROR(NotContained);
JJA_DEFINE_ERROR(NotCommutative);
JJA_DEFINE_ERROR(NotJacobiJordan);
JJA_DEFINE_ERROR(NotAModule);
JJA_DEFINE_ERROR(InvalidCrossedSystem);
JJA_DEFINE_ERROR(InvalidSemidirectSystem);
JJA_DEFINE_ERROR(NotAlgebraMap);
JJA_DEFINE_ERROR(NotSection);
JJA_DEFINE_ERROR(InvalidLambda);
JJA_DEFINE_ERROR(InvalidCoflagDatum);
JJA_DEFINE_ERROR(ActionNotAnticommuting);
JJA_DEFINE_ERROR(ClassificationCharUnsupported);
JJA_DEFINE_ERROR(CapExceeded);
JJA_DEFINE_ERROR(NotCentral);
JJA_DEFINE_ERROR(ZeroAlpha);
JJA_DEFINE_ERROR(ZeroCentral);
JJA_DEFINE_ERROR(BadParameters);
JJA_DEFINE_ERROR(UnknownBasisName);

#undef JJA_DEFINE_ERROR

/// Raised by the file-format parser; carries the offending position.
struct ParseError : Error {
  int line{0};
  int column{0};
  ParseError(const std::string& what, int line_, int column_)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

}  // namespace jja
