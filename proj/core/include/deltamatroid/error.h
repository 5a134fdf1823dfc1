// Copyright 2026 The Authors.
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

#ifndef DELTAMATROID_ERROR_H_
#define DELTAMATROID_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmat {

enum class ErrorCode {
  kEmptyFamily,
  kOutOfRange,
  kSameElement,
  kWouldBeEmpty,
  kEmptyGroundSet,
  kGroundSetTooLarge,
  kSizeMismatch,
  kNotDeltaMatroid,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All domain failures raised by the library derive from this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text readers. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dmat

#endif  // DELTAMATROID_ERROR_H_
