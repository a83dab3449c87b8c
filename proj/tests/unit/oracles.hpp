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
#include <string>

// Reference computations written independently of the library code.

/// Whole percent nearest to 100*num/den, ties going up, found by scanning
/// candidates with exact cross-multiplication.
inline std::uint64_t oracle_percent(std::uint64_t num, std::uint64_t den) {
  std::uint64_t best = 0;
  for (std::uint64_t k = 0; k <= 100; ++k) {
    // k is acceptable when k - 1/2 <= 100*num/den, i.e. (2k - 1) * den <= 200 * num.
    if ((2 * k) * den <= 200 * num + den) best = k;
  }
  return best;
}

inline std::string oracle_percent_text(std::uint64_t num, std::uint64_t den) {
  return std::to_string(oracle_percent(num, den)) + "%";
}
