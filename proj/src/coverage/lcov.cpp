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

#include "xmut/coverage/lcov.hpp"

#include <charconv>
#include <optional>
#include <map>
#include <set>

#include "xmut/error.hpp"

namespace xmut::coverage {

namespace {

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

LcovParseResult parse_lcov(std::string_view text) {
  LcovParseResult result;
  std::optional<std::string> file;
  std::set<int> record_lines;
  std::map<int, std::uint64_t> record_hits;
  std::optional<std::uint64_t> lf;
  std::optional<std::uint64_t> lh;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (line == "end_of_record") {
      if (!file) throw ParseError("end_of_record without SF", line_no);
      if (lf && *lf != record_lines.size()) {
        result.warnings.push_back(*file + ": LF " + std::to_string(*lf) + " but " +
                                  std::to_string(record_lines.size()) + " DA lines");
      }
      std::size_t hit_lines = 0;
      for (const auto& [ln, hits] : record_hits) hit_lines += hits > 0 ? 1 : 0;
      if (lh && *lh != hit_lines) {
        result.warnings.push_back(*file + ": LH " + std::to_string(*lh) + " but " +
                                  std::to_string(hit_lines) + " hit lines");
      }
      file.reset();
      lf.reset();
      lh.reset();
      record_lines.clear();
      record_hits.clear();
      continue;
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("malformed record '" + std::string(line) + "'", line_no);
    }
    const std::string_view tag = line.substr(0, colon);
    const std::string_view value = line.substr(colon + 1);
    if (tag == "SF") {
      if (file) throw ParseError("SF inside an open record", line_no);
      if (value.empty()) throw ParseError("empty SF path", line_no);
      file = std::string(value);
      continue;
    }
    if (tag == "DA") {
      if (!file) throw ParseError("DA outside a record", line_no);
      const std::size_t comma = value.find(',');
      if (comma == std::string_view::npos) throw ParseError("malformed DA", line_no);
      std::string_view hits_text = value.substr(comma + 1);
      // An optional third field carries a checksum.
      if (auto c2 = hits_text.find(','); c2 != std::string_view::npos) {
        hits_text = hits_text.substr(0, c2);
      }
      auto ln = parse_number<int>(value.substr(0, comma));
      auto hits = parse_number<std::uint64_t>(hits_text);
      if (!ln || *ln <= 0 || !hits) throw ParseError("malformed DA", line_no);
      result.model.add(*file, *ln, *hits);
      record_lines.insert(*ln);
      record_hits[*ln] += *hits;
      continue;
    }
    if (tag == "LF" || tag == "LH") {
      if (!file) throw ParseError(std::string(tag) + " outside a record", line_no);
      auto n = parse_number<std::uint64_t>(value);
      if (!n) throw ParseError("malformed " + std::string(tag), line_no);
      (tag == "LF" ? lf : lh) = *n;
      continue;
    }
    // TN, FN, FNDA, BRDA and anything else: not needed for line coverage.
  }
  if (file) throw ParseError("unterminated record for " + *file, line_no);
  return result;
}

std::string emit_lcov(const CoverageModel& model) {
  std::string out;
  for (const auto& [file, lines] : model.files()) {
    out += "SF:" + file + "\n";
    std::size_t hit = 0;
    for (const auto& [line, hits] : lines) {
      out += "DA:" + std::to_string(line) + "," + std::to_string(hits) + "\n";
      hit += hits > 0 ? 1 : 0;
    }
    out += "LF:" + std::to_string(lines.size()) + "\n";
    out += "LH:" + std::to_string(hit) + "\n";
    out += "end_of_record\n";
  }
  return out;
}

}  // namespace xmut::coverage
