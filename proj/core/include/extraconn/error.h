// Copyright 2026 The extraconn Authors.
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

#ifndef EXTRACONN_ERROR_H_
#define EXTRACONN_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace extraconn {

enum class ErrorCode {
  kInvalidVertex,
  kSelfLoopRejected,
  kParseError,
  kNotConnected,
  kSizeGuardExceeded,
  kInvalidSpec,
  kNoFormula,
  kOutOfTheoremRange,
  kNotATree,
  kUnknownTheorem,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base of every exception thrown by the library. The code identifies the
// failure class; what() carries a human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::kParseError,
              message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace extraconn

#endif  // EXTRACONN_ERROR_H_
