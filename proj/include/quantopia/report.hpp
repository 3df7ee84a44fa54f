//  Copyright 2026 The Quantopia Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef QUANTOPIA_REPORT_HPP_
#define QUANTOPIA_REPORT_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quantopia/io.hpp"

namespace quantopia {

/// One named check with its verdict. A failing check always carries a
/// witness or a reason.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::optional<std::string> witness;
  std::string reason;
  std::optional<double> tolerance;
  /// Extra facts worth printing, in insertion order.
  std::vector<std::pair<std::string, std::string>> info;
  double runtime_ms = 0.0;
};

struct InstanceDigest {
  std::string role;
  std::string label;
  std::string digest;
};

struct RunReport {
  std::string command;
  std::vector<InstanceDigest> instances;
  /// Run parameters such as grid size or caps, in insertion order.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckResult> checks;

  bool pass() const;

  /// Appends a check, filling in a reason for failures that lack one.
  CheckResult& add(CheckResult c);
  CheckResult& add(std::string name, bool pass, std::string reason = {},
                   std::optional<std::string> witness = std::nullopt);
  void append(const RunReport& other);

  /// Timing fields are left out unless requested, so reports are reproducible.
  Json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

/// Wall-clock stopwatch in milliseconds.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace quantopia

#endif  // QUANTOPIA_REPORT_HPP_
