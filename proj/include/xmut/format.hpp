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

#include <cstdint>
#include <optional>
#include <string>

namespace xmut {

/// Whole percent of num/den, rounded half up. Exact integer arithmetic.
/// Requires den > 0 and num >= 0.
std::uint64_t percent_half_up(std::uint64_t num, std::uint64_t den);

/// "85%", or "n/a" when den == 0.
std::string render_percent(std::uint64_t num, std::uint64_t den);

/// Decimal with thousands separators: 34391374 -> "34,391,374".
std::string group_thousands(std::uint64_t value);

/// "13 min", "4 h 1 min", "2.4 s": the coarse style of tabulated run times.
std::string render_duration_ms(std::uint64_t ms);

}  // namespace xmut
