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

#ifndef EXTRACONN_SERIALIZATION_H_
#define EXTRACONN_SERIALIZATION_H_

#include <vector>

#include <nlohmann/json.hpp>

#include "extraconn/extra_connectivity.h"
#include "extraconn/extremal.h"
#include "extraconn/verification.h"

namespace extraconn {

// Keys keep insertion order so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

// {"n","g","kappa_g","witness","defined"}
Json ToJson(const ExtraConnResult& result);
// Array of the above.
Json ToJson(const std::vector<ExtraConnResult>& profile);
// {"theorem","checked","failures":[{"graph6","g","expected","got"}], ...}
Json ToJson(const VerificationReport& report);
// {"quantity","n","g","k","value","witness","closed_form","agrees", ...}
Json ToJson(const ExtremalResult& result);
Json ToJson(const ClaimValue& value);

}  // namespace extraconn

#endif  // EXTRACONN_SERIALIZATION_H_
