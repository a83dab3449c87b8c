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

#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "xmut/coverage/lcov.hpp"
#include "xmut/error.hpp"

using namespace xmut;
using namespace xmut::coverage;

TEST_CASE("parse a single record") {
  auto r = parse_lcov("SF:a\nDA:1,2\nDA:2,0\nend_of_record\n");
  CHECK(r.model.hits("a", 1) == 2);
  CHECK(r.model.hits("a", 2) == 0);
  CHECK(r.model.instrumented("a", 2));
  CHECK_FALSE(r.model.covered("a", 2));
  CHECK(r.model.instrumented_count() == 2);
  CHECK(r.model.covered_count() == 1);
  CHECK(r.warnings.empty());
}

TEST_CASE("empty input gives an empty model") {
  CHECK(parse_lcov("").model.empty());
  CHECK(emit_lcov(CoverageModel{}).empty());
}

TEST_CASE("duplicate DA lines are summed") {
  auto r = parse_lcov(read_file(fixture_path("lcov/duplicate_da.info")));
  CHECK(r.model.hits("src/dup.cpp", 5) == 4);
  CHECK(r.warnings.empty());
}

TEST_CASE("unknown tags are ignored") {
  auto r = parse_lcov(read_file(fixture_path("lcov/unknown_tags.info")));
  CHECK(r.model.instrumented_count() == 3);
  CHECK(r.model.covered_count() == 2);
  CHECK(r.warnings.empty());
}

TEST_CASE("LF and LH disagreements are warnings") {
  auto r = parse_lcov(read_file(fixture_path("lcov/lf_lh_mismatch.info")));
  CHECK(r.model.instrumented_count() == 2);
  CHECK(r.warnings.size() == 2);
}

TEST_CASE("malformed records report the line") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_lcov(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("DA:1,1\n") == 1);
  CHECK(line_of("SF:a\nDA:x,1\nend_of_record\n") == 2);
  CHECK(line_of("SF:a\nDA:1\nend_of_record\n") == 2);
  CHECK(line_of("SF:a\nSF:b\n") == 2);
  CHECK(line_of("SF:a\nDA:1,1\n") == 2);  // last line read
  CHECK(line_of("SF:a\ngarbage\nend_of_record\n") == 2);
}

TEST_CASE("emit sorts and recomputes totals") {
  CoverageModel m;
  m.add("b.cpp", 9, 1);
  m.add("a.cpp", 3, 0);
  m.add("a.cpp", 1, 5);
  CHECK(emit_lcov(m) ==
        "SF:a.cpp\nDA:1,5\nDA:3,0\nLF:2\nLH:1\nend_of_record\n"
        "SF:b.cpp\nDA:9,1\nLF:1\nLH:1\nend_of_record\n");
}

TEST_CASE("LH equals the number of emitted DA records with hits") {
  const std::string text = emit_lcov(parse_lcov(read_file(fixture_path("lcov/ground_truth_baseline.info"))).model);
  std::istringstream in(text);
  int da_hit = 0;
  int lh = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("DA:", 0) == 0 && line.substr(line.find(',') + 1) != "0") ++da_hit;
    if (line.rfind("LH:", 0) == 0) lh += std::stoi(line.substr(3));
  }
  CHECK(lh == da_hit);
  CHECK(lh > 0);
}

TEST_CASE("parse-emit-parse is a fixpoint on every coverage fixture") {
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_path("lcov"))) {
    CAPTURE(entry.path().string());
    const auto first = parse_lcov(read_file(entry.path())).model;
    const std::string emitted = emit_lcov(first);
    const auto second = parse_lcov(emitted);
    CHECK(second.model == first);
    CHECK(second.warnings.empty());
    CHECK(emit_lcov(second.model) == emitted);
    ++n;
  }
  CHECK(n >= 5);
}

TEST_CASE("round trip holds for random models") {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    CoverageModel m;
    const int files = 1 + static_cast<int>(rng() % 4);
    for (int f = 0; f < files; ++f) {
      const std::string name = "src/f" + std::to_string(f) + ".cpp";
      const int lines = 1 + static_cast<int>(rng() % 30);
      for (int i = 0; i < lines; ++i) m.add(name, 1 + static_cast<int>(rng() % 200), rng() % 3 == 0 ? 0 : rng() % 50);
    }
    REQUIRE(parse_lcov(emit_lcov(m)).model == m);
  }
}
