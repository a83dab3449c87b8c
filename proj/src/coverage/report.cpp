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

#include "xmut/coverage/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "xmut/error.hpp"
#include "xmut/format.hpp"
#include "xmut/io.hpp"

namespace xmut::coverage {

namespace fs = std::filesystem;
using classifier::Verdict;
using subject::MethodSite;

CoverageModel AdjustedCoverage::adjusted_model() const {
  CoverageModel out;
  for (const auto& [file, hits] : base.files()) {
    for (const auto& [line, count] : hits) {
      out.add(file, line, forced_uncovered.count({file, line}) ? 0 : count);
    }
  }
  return out;
}

CoverageRatios coverage_ratios(std::uint64_t covered, std::uint64_t instrumented,
                               std::uint64_t pseudo_covered) {
  if (instrumented == 0) return {};
  const double den = static_cast<double>(instrumented);
  return {static_cast<double>(covered) / den, static_cast<double>(covered - pseudo_covered) / den};
}

AdjustedCoverage adjust_coverage(const CoverageModel& coverage, const std::vector<MethodSite>& methods,
                                 const std::vector<classifier::MethodClassification>& classifications) {
  AdjustedCoverage out;
  out.base = coverage;
  std::map<std::string, const MethodSite*> by_id;
  for (const MethodSite& m : methods) by_id[m.id] = &m;
  for (const auto& c : classifications) {
    if (c.verdict != Verdict::kPseudoTested) continue;
    auto it = by_id.find(c.method_id);
    const MethodSite* m = it == by_id.end() ? nullptr : it->second;
    bool present = false;
    if (m) {
      for (int ln = m->body.first_body_line(); ln <= m->body.last_body_line(); ++ln) {
        present = present || coverage.instrumented(m->file, ln);
      }
    }
    if (!present) {
      throw ConsistencyError("pseudo-tested method " + c.method_id + " is not in the coverage data");
    }
    for (int ln : m->covered_lines) {
      if (coverage.covered(m->file, ln)) out.forced_uncovered.emplace(m->file, ln);
    }
  }
  out.covered = coverage.covered_count();
  out.instrumented = coverage.instrumented_count();
  out.forced_covered = out.forced_uncovered.size();
  const CoverageRatios r = coverage_ratios(out.covered, out.instrumented, out.forced_covered);
  out.original_ratio = r.original;
  out.adjusted_ratio = r.adjusted;
  return out;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

std::string variant_list(const std::vector<mutant::VariantKind>& kinds) {
  std::string out;
  for (auto k : kinds) {
    if (!out.empty()) out += ", ";
    out += mutant::to_string(k);
  }
  return out.empty() ? "-" : out;
}

std::string coverage_line(std::uint64_t covered, std::uint64_t forced, std::uint64_t instrumented) {
  return std::to_string(covered) + "/" + std::to_string(instrumented) + " (" +
         render_percent(covered, instrumented) + ") -> " + std::to_string(covered - forced) + "/" +
         std::to_string(instrumented) + " (" + render_percent(covered - forced, instrumented) +
         ") adjusted";
}

std::string render_file(const std::string& file, const std::string& text, const AdjustedCoverage& adj,
                        const std::set<int>& partial_lines) {
  const auto& hits = adj.base.files().at(file);
  std::uint64_t covered = 0;
  std::uint64_t forced = 0;
  std::ostringstream out;
  out << "# " << file << "\n\n";
  out << "Markers: `+` covered, `-` uncovered, `P` pseudo-tested, `~` partially tested, "
         "blank not instrumented.\n\n";
  out << "```text\n";
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i + 1);
    char marker = ' ';
    if (auto h = hits.find(ln); h != hits.end()) {
      if (h->second == 0) {
        marker = '-';
      } else if (adj.forced_uncovered.count({file, ln})) {
        marker = 'P';
      } else if (partial_lines.count(ln)) {
        marker = '~';
      } else {
        marker = '+';
      }
    }
    char num[16];
    std::snprintf(num, sizeof num, "%5d", ln);
    out << marker << ' ' << num << " | " << lines[i] << "\n";
  }
  out << "```\n\n";
  for (const auto& [ln, count] : hits) {
    if (count == 0) continue;
    ++covered;
    if (adj.forced_uncovered.count({file, ln})) ++forced;
  }
  out << "Line coverage: " << coverage_line(covered, forced, hits.size()) << "\n";
  return out.str();
}

}  // namespace

std::map<std::string, std::string> render_annotated_report(const AdjustedCoverage& adjusted,
                                                           const ReportContext& ctx,
                                                           const fs::path& source_root) {
  const auto& methods = *ctx.methods;
  const auto& classes = *ctx.classifications;
  const auto& summary = *ctx.summary;
  std::map<std::string, const MethodSite*> by_id;
  for (const MethodSite& m : methods) by_id[m.id] = &m;

  std::map<std::string, std::set<int>> partial;
  for (const auto& c : classes) {
    if (c.verdict != Verdict::kPartiallyTested) continue;
    const MethodSite* m = by_id.at(c.method_id);
    partial[m->file].insert(m->covered_lines.begin(), m->covered_lines.end());
  }

  std::map<std::string, std::string> out;
  std::vector<std::string> missing;
  for (const auto& [file, hits] : adjusted.base.files()) {
    std::string text;
    try {
      text = read_file(source_root / file);
    } catch (const std::exception&) {
      missing.push_back(file);
      continue;
    }
    out["files/" + file + ".md"] = render_file(file, text, adjusted, partial[file]);
  }

  std::ostringstream s;
  s << "# Extreme mutation report\n\n";
  s << "## Replacement variants\n\n";
  s << "| Return kind | Replacements |\n|---|---|\n";
  s << "| void | `{}` |\n";
  s << "| boolean | `return true;` `return false;` |\n";
  s << "| integer_like | `return 0;` `return 1;` |\n";
  s << "| float_like | `return 0.0;` `return 1.0;` |\n";
  s << "| string_like | `return \"\";` `return \"A\";` |\n";
  s << "| char_like | `return ' ';` `return 'A';` |\n";
  s << "| reference | `return nullptr;` for pointers, `return {};` otherwise |\n\n";

  s << "## Mutants\n\n";
  s << "| Score | Killed / Total | Survived | Invalid | Mutators | Executed Tests |\n";
  s << "|---|---|---|---|---|---|\n";
  s << "| " << render_percent(summary.killed, summary.total_valid) << " | "
    << group_thousands(summary.killed) << " / " << group_thousands(summary.total_valid) << " | "
    << group_thousands(summary.survived) << " | " << group_thousands(summary.invalid) << " | "
    << summary.mutator_kinds_used << " | " << group_thousands(summary.executed_tests_total)
    << " |\n\n";

  s << "## Pseudo-tested code\n\n";
  s << "| | Pseudo-tested | Total | Proportion |\n|---|---|---|---|\n";
  auto row = [&](const char* name, std::uint64_t a, std::uint64_t b) {
    s << "| " << name << " | " << group_thousands(a) << " | " << group_thousands(b) << " | "
      << render_percent(a, b) << " |\n";
  };
  row("Methods", summary.methods_pseudo, summary.methods_total);
  row("Lines (covered)", summary.lines_covered_pseudo, summary.lines_covered_total);
  row("Lines (total)", summary.lines_total_pseudo, summary.lines_instrumented_total);
  s << "\nLine coverage: "
    << coverage_line(adjusted.covered, adjusted.forced_covered, adjusted.instrumented) << "\n\n";

  auto method_table = [&](Verdict verdict, const char* title, bool with_tag) {
    s << "## " << title << "\n\n";
    bool any = false;
    for (const auto& c : classes) {
      if (c.verdict != verdict) continue;
      if (!any) {
        s << "| Method | Access | Lines | " << (with_tag ? "Tag | " : "") << "Surviving variants |\n";
        s << (with_tag ? "|---|---|---|---|---|\n" : "|---|---|---|---|\n");
        any = true;
      }
      const MethodSite* m = by_id.at(c.method_id);
      s << "| `" << m->id << "` | " << subject::to_string(m->access) << " | "
        << m->body_line_count() << " | ";
      if (with_tag) {
        std::string tag = "-";
        if (ctx.tags && ctx.tags->count(c.method_id)) tag = ctx.tags->at(c.method_id);
        s << tag << " | ";
      }
      s << variant_list(c.surviving_variants) << " |\n";
    }
    s << (any ? "\n" : "None.\n\n");
  };
  method_table(Verdict::kPseudoTested, "Pseudo-tested methods", true);
  method_table(Verdict::kPartiallyTested, "Partially tested methods", false);

  s << "## Verdicts\n\n";
  s << "| Method | Verdict |\n|---|---|\n";
  for (const auto& c : classes) s << "| `" << c.method_id << "` | " << classifier::to_string(c.verdict) << " |\n";
  s << "\n";

  std::vector<std::string> notes = ctx.notes;
  for (const MethodSite& m : methods) {
    if (m.generic_return) {
      notes.push_back("`" + m.id + "` returns a template parameter and is treated as a reference type");
    }
  }
  for (const std::string& f : missing) notes.push_back(f + ": source file not found, skipped");
  if (!notes.empty()) {
    s << "## Notes\n\n";
    for (const std::string& n : notes) s << "- " << n << "\n";
  }
  out["summary.md"] = s.str();
  return out;
}

}  // namespace xmut::coverage
