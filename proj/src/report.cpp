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

#include "quantopia/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace quantopia {

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult& RunReport::add(CheckResult c) {
  if (!c.pass && !c.witness && c.reason.empty()) c.reason = "check failed";
  checks.push_back(std::move(c));
  return checks.back();
}

CheckResult& RunReport::add(std::string name, bool pass, std::string reason,
                            std::optional<std::string> witness) {
  CheckResult c;
  c.name = std::move(name);
  c.pass = pass;
  c.reason = std::move(reason);
  c.witness = std::move(witness);
  return add(std::move(c));
}

void RunReport::append(const RunReport& other) {
  for (const auto& i : other.instances) instances.push_back(i);
  for (const auto& c : other.checks) checks.push_back(c);
}

Json RunReport::to_json(bool timing) const {
  Json j = Json::object();
  j["command"] = command;
  Json inst = Json::array();
  for (const auto& i : instances) {
    inst.push_back({{"role", i.role}, {"label", i.label}, {"digest", i.digest}});
  }
  j["instances"] = inst;
  if (!parameters.empty()) {
    Json params = Json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
  }
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json o = Json::object();
    o["name"] = c.name;
    o["verdict"] = c.pass ? "pass" : "fail";
    if (c.witness) o["witness"] = *c.witness;
    if (!c.reason.empty()) o["reason"] = c.reason;
    if (c.tolerance) o["tolerance"] = *c.tolerance;
    if (!c.info.empty()) {
      Json info = Json::object();
      for (const auto& [k, v] : c.info) info[k] = v;
      o["info"] = info;
    }
    if (timing) o["runtime_ms"] = c.runtime_ms;
    cs.push_back(std::move(o));
  }
  j["checks"] = cs;
  j["overall"] = pass() ? "pass" : "fail";
  return j;
}

std::string RunReport::to_text(bool timing) const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& i : instances) {
    os << "  " << i.role << ": " << i.label << " [" << i.digest << "]\n";
  }
  for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    os << (c.pass ? "PASS  " : "FAIL  ");
    if (timing) {
      os << std::left << std::setw(static_cast<int>(width)) << c.name << "  (" << std::fixed
         << std::setprecision(1) << c.runtime_ms << " ms)" << std::defaultfloat;
    } else {
      os << c.name;
    }
    os << "\n";
    if (c.witness) os << "      witness: " << *c.witness << "\n";
    if (!c.reason.empty()) os << "      reason: " << c.reason << "\n";
    if (c.tolerance) os << "      tolerance: " << *c.tolerance << "\n";
    for (const auto& [k, v] : c.info) os << "      " << k << ": " << v << "\n";
  }
  os << "overall: " << (pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace quantopia
