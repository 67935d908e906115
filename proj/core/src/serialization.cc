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

#include "extraconn/serialization.h"

namespace extraconn {

namespace {

template <class T>
Json OrNull(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json ToJson(const ClaimValue& value) {
  if (const int* i = std::get_if<int>(&value)) return *i;
  if (const bool* b = std::get_if<bool>(&value)) return *b;
  return nullptr;
}

Json ToJson(const ExtraConnResult& result) {
  Json out;
  out["n"] = result.n;
  out["g"] = result.g;
  out["kappa_g"] = OrNull(result.value);
  out["witness"] =
      result.witness ? Json(result.witness->ToVector()) : Json(nullptr);
  out["defined"] = result.defined();
  return out;
}

Json ToJson(const std::vector<ExtraConnResult>& profile) {
  Json out = Json::array();
  for (const auto& r : profile) out.push_back(ToJson(r));
  return out;
}

Json ToJson(const VerificationReport& report) {
  Json out;
  out["theorem"] = report.theorem;
  out["checked"] = report.checked;
  Json failures = Json::array();
  for (const auto& c : report.failures) {
    Json f;
    f["graph6"] = c.graph6;
    f["g"] = c.g;
    f["expected"] = ToJson(c.expected);
    f["got"] = ToJson(c.got);
    if (!c.params.empty()) f["params"] = c.params;
    failures.push_back(std::move(f));
  }
  out["failures"] = std::move(failures);
  out["excluded"] = report.excluded;
  out["passed"] = report.passed();
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

Json ToJson(const ExtremalResult& result) {
  Json out;
  out["quantity"] = std::string(ExtremalQuantityName(result.quantity));
  out["n"] = result.n;
  out["g"] = result.g;
  out["k"] = result.k;
  out["value"] = OrNull(result.value);
  out["witness"] = OrNull(result.witness);
  out["closed_form"] = OrNull(result.closed_form);
  out["agrees"] = result.agrees;
  out["graphs_scanned"] = result.graphs_scanned;
  out["skipped_disconnected"] = result.skipped_disconnected;
  if (!result.note.empty()) out["note"] = result.note;
  return out;
}

}  // namespace extraconn
