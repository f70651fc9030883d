// Copyright 2026 The decaycode Authors
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

#include <nlohmann/json.hpp>

#include "decaycode/codegen.hpp"
#include "decaycode/decode.hpp"
#include "decaycode/noise.hpp"
#include "decaycode/search.hpp"
#include "decaycode/verify.hpp"

namespace decaycode {

using Json = nlohmann::json;

/// Complex numbers are written as [re, im].
Json to_json(Complex c);
Complex complex_from_json(const Json& j);

Json to_json(const LogicalQubit& q);
Json to_json(const CodeSpec& code);
/// Inverse of to_json(CodeSpec); validates the result.
CodeSpec code_from_json(const Json& j);

Json to_json(const ConditionReport& report);
Json to_json(const SyndromeTable& table);
Json to_json(const TableCrossCheck& check);
Json to_json(const BoundResult& bound);
Json to_json(const SearchStats& stats);
Json to_json(const SearchResult& result);

/// One line of a trajectory JSONL stream.
Json to_json(const Trajectory& t);

}  // namespace decaycode
