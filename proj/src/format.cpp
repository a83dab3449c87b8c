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

#include "xmut/format.hpp"

#include <cstdio>
#include <stdexcept>

namespace xmut {

std::uint64_t percent_half_up(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("percent of zero denominator");
  // floor(100 * num / den + 1/2) == floor((200 * num + den) / (2 * den))
  return (200 * num + den) / (2 * den);
}

std::string render_percent(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "n/a";
  return std::to_string(percent_half_up(num, den)) + "%";
}

std::string group_thousands(std::uint64_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string render_duration_ms(std::uint64_t ms) {
  if (ms < 60'000) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", static_cast<double>(ms) / 1000.0);
    return buf;
  }
  const std::uint64_t minutes = (ms + 30'000) / 60'000;
  if (minutes < 60) return std::to_string(minutes) + " min";
  return std::to_string(minutes / 60) + " h " + std::to_string(minutes % 60) +
         " min";
}

}  // namespace xmut
