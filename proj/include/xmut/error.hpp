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

#include <stdexcept>
#include <string>
#include <vector>

namespace xmut {

/// Base class for all errors raised by xmut.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The on-disk file no longer matches the content captured at discovery.
class StaleSpanError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (coverage data, results files, manifests).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Two inputs that should describe the same campaign disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The baseline suite is red; mutation results would be meaningless.
class BaselineRefused : public Error {
 public:
  BaselineRefused(const std::string& what, std::vector<std::string> failing)
      : Error(what), failing_tests_(std::move(failing)) {}

  const std::vector<std::string>& failing_tests() const {
    return failing_tests_;
  }

 private:
  std::vector<std::string> failing_tests_;
};

/// Build or toolchain failure outside of a mutant run.
class InfrastructureError : public Error {
 public:
  InfrastructureError(const std::string& what, std::string diagnostics = {})
      : Error(what), diagnostics_(std::move(diagnostics)) {}

  const std::string& diagnostics() const { return diagnostics_; }

 private:
  std::string diagnostics_;
};

/// Thrown from a campaign hook to stop the campaign after reverting.
class CampaignAborted : public Error {
 public:
  using Error::Error;
};

}  // namespace xmut
