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

#include "extraconn/error.h"

namespace extraconn {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex:
      return "InvalidVertex";
    case ErrorCode::kSelfLoopRejected:
      return "SelfLoopRejected";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kNotConnected:
      return "NotConnected";
    case ErrorCode::kSizeGuardExceeded:
      return "SizeGuardExceeded";
    case ErrorCode::kInvalidSpec:
      return "InvalidSpec";
    case ErrorCode::kNoFormula:
      return "NoFormula";
    case ErrorCode::kOutOfTheoremRange:
      return "OutOfTheoremRange";
    case ErrorCode::kNotATree:
      return "NotATree";
    case ErrorCode::kUnknownTheorem:
      return "UnknownTheorem";
  }
  return "Unknown";
}

}  // namespace extraconn
