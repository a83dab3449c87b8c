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

#include <sstream>

#include "test_support.hpp"
#include "xmut/cli.hpp"
#include "xmut/coverage/lcov.hpp"

using namespace xmut;
using namespace xmut::cli;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out[relative_generic(e.path(), dir)] = read_file(e.path());
  }
  return out;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == kExitRefused);
  CHECK(invoke({"frobnicate"}).code == kExitRefused);
  CHECK(invoke({"run", "--jobs", "0", "--project", "."}).code == kExitRefused);
  CHECK(invoke({"run", "--format", "xml"}).code == kExitRefused);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("red baseline exits 2 and lists the failing test") {
  TempDir tmp;
  const fs::path root = copy_fixture("red", tmp.path());
  auto r = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR});
  CHECK(r.code == kExitRefused);
  CHECK(r.err.find("deliberately red") != std::string::npos);
}

TEST_CASE("project without tests exits 2") {
  TempDir tmp;
  fs::create_directories(tmp.path() / "src");
  write_file(tmp.path() / "src" / "a.cpp", "int f() { return 1; }\n");
  auto r = invoke({"run", "--project", tmp.path().string(), "--cache-dir", XMUT_TEST_CACHE_DIR});
  CHECK(r.code == kExitRefused);
  CHECK(r.err.find("no tests found") != std::string::npos);
}

TEST_CASE("run writes results that report regenerates exactly") {
  TempDir tmp;
  const fs::path root = copy_fixture("timeout", tmp.path());
  const fs::path out = tmp.path() / "out";
  const std::string tree_before = subject::tree_hash(root);
  auto r = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR, "--results-out",
                   (out / "results.json").string(), "--coverage-out", (out / "adjusted.info").string(),
                   "--report-out", (out / "report").string()});
  REQUIRE_MESSAGE(r.code == kExitOk, r.err);
  CHECK(r.out.find("Killed / Total") != std::string::npos);
  CHECK(r.out.find("100%") != std::string::npos);
  CHECK(r.err.find("[4/4]") != std::string::npos);
  CHECK(subject::tree_hash(root) == tree_before);
  REQUIRE(fs::exists(out / "baseline.info"));

  const auto j = nlohmann::json::parse(read_file(out / "results.json"));
  CHECK(j.at("schema_version") == kResultsSchemaVersion);
  const ResultsFile parsed = results_from_json(j);
  CHECK(nlohmann::json(to_json(parsed)) == j);
  CHECK(parsed.mutants.size() == 4);
  CHECK(parsed.classifications.size() == 2);

  const std::vector<std::string> report_args = {
      "report", "--results", (out / "results.json").string(), "--coverage", (out / "baseline.info").string(),
      "--coverage-out", (tmp.path() / "r1" / "adjusted.info").string(), "--report-out",
      (tmp.path() / "r1" / "report").string()};
  REQUIRE(invoke(report_args).code == kExitOk);
  auto second = report_args;
  second[6] = (tmp.path() / "r2" / "adjusted.info").string();
  second[8] = (tmp.path() / "r2" / "report").string();
  REQUIRE(invoke(second).code == kExitOk);

  CHECK(read_dir(tmp.path() / "r1" / "report") == read_dir(out / "report"));
  CHECK(read_dir(tmp.path() / "r2" / "report") == read_dir(out / "report"));
  CHECK(read_file(tmp.path() / "r1" / "adjusted.info") == read_file(out / "adjusted.info"));
  CHECK(subject::tree_hash(root) == tree_before);

  SUBCASE("newer schema is refused") {
    auto newer = j;
    newer["schema_version"] = kResultsSchemaVersion + 1;
    write_file(out / "newer.json", newer.dump());
    auto args = report_args;
    args[2] = (out / "newer.json").string();
    auto rr = invoke(args);
    CHECK(rr.code == kExitRefused);
    CHECK(rr.err.find(std::to_string(kResultsSchemaVersion + 1)) != std::string::npos);
    CHECK(rr.err.find(std::to_string(kResultsSchemaVersion)) != std::string::npos);
  }
  SUBCASE("structured output") {
    auto args = report_args;
    args.push_back("--format");
    args.push_back("structured");
    auto rr = invoke(args);
    REQUIRE(rr.code == kExitOk);
    auto s = nlohmann::json::parse(rr.out);
    CHECK(s.at("summary").at("killed") == 4);
    CHECK(s.at("pseudo_tested").empty());
  }
}

TEST_CASE("max-pseudo threshold and focused runs") {
  TempDir tmp;
  const fs::path root = copy_fixture("ground_truth", tmp.path());
  auto r = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR, "--only",
                   "src/connection.cpp", "src/table.cpp::netkit::TableWriter::header() const",
                   "--max-pseudo", "0", "--format", "structured"});
  CHECK(r.code == kExitThreshold);
  auto s = nlohmann::json::parse(r.out);
  CHECK(s.at("pseudo_tested").size() == 3);
  CHECK(s.at("summary").at("methods_total") == 4);

  auto again = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR, "--only",
                       "src/util.cpp::util::is_even(int)", "--max-pseudo", "0"});
  CHECK(again.code == kExitOk);
  CHECK(again.err.find("reusing baseline") != std::string::npos);

  write_file(tmp.path() / "changed.txt", "src/util.cpp\n\n");
  auto changed = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR,
                         "--changed-from", (tmp.path() / "changed.txt").string(), "--format", "structured"});
  REQUIRE(changed.code == kExitOk);
  CHECK(nlohmann::json::parse(changed.out).at("summary").at("methods_total") == 3);

  auto publics = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR, "--only",
                         "src/inventory.cpp", "--access", "public,private", "--format", "structured"});
  REQUIRE(publics.code == kExitOk);
  CHECK(nlohmann::json::parse(publics.out).at("summary").at("methods_total") == 6);
  auto privates = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR, "--only",
                          "src/inventory.cpp", "--access", "private"});
  CHECK(privates.code == kExitRefused);

  auto none = invoke({"run", "--project", root.string(), "--cache-dir", XMUT_TEST_CACHE_DIR, "--only", "nothing*"});
  CHECK(none.code == kExitRefused);
}
