// Copyright 2026 The xmut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xmut/coverage/model.hpp"

namespace xmut::coverage {

struct LcovParseResult {
  CoverageModel model;
  std::vector<std::string> warnings;  // LF/LH disagreements
};

/// Parses the line-oriented LCOV trace format: `SF:`, `DA:<line>,<hits>`,
/// `LF:`, `LH:` and `end_of_record`. Repeated DA lines for one file are
/// summed. Unknown tags are ignored. Throws ParseError on malformed records.
LcovParseResult parse_lcov(std::string_view text);

/// Emits files and lines in ascending order with recomputed LF/LH.
std::string emit_lcov(const CoverageModel& model);

}  // namespace xmut::coverage
