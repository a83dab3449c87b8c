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

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace xmut::subject {

struct ProcessResult {
  int exit_code = -1;    // valid when !signaled && !timed_out
  int signal = 0;        // terminating signal, 0 if exited normally
  bool timed_out = false;
  std::string output;    // stdout and stderr interleaved, truncated at the cap
  std::chrono::milliseconds wall_time{0};

  bool ok() const { return !timed_out && signal == 0 && exit_code == 0; }
};

/// Runs argv[0] (searched in PATH) in its own process group. On timeout the
/// whole group is killed. Throws InfrastructureError if the program cannot
/// be started.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::filesystem::path& cwd,
                          std::optional<std::chrono::milliseconds> timeout =
                              std::nullopt,
                          std::size_t output_cap = std::size_t{1} << 20);

}  // namespace xmut::subject
