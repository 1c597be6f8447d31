// Copyright 2026 The coloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace coloc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over different ground fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not conform.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A structure failed one of its defining identities.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The semisimple quotient of a dual algebra does not split over the ground
/// field, so basic idempotents cannot be produced.
class NonSplitError : public Error {
 public:
  NonSplitError(const std::string& what, std::string min_poly)
      : Error(what), minimal_polynomial(std::move(min_poly)) {}
  std::string minimal_polynomial;
};

/// The radical candidate failed its certificate (nilpotent ideal with a
/// semisimple quotient).
class RadicalVerificationError : public Error {
 public:
  using Error::Error;
};

/// A direct multiplicity count disagrees with dim Ext^n(S, M) / dim Hom(S, S).
class BassMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (scalars, files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A self-check inside the library failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace coloc
