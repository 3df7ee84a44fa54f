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

#include "quantopia/types.hpp"

#include <limits>
#include <sstream>

namespace quantopia {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

void require_enumerable(std::size_t values, std::size_t arity, const Limits& limits,
                        const std::string& what) {
  const std::uint64_t count = saturating_pow(values, arity);
  if (count > limits.enumeration_cap) {
    std::ostringstream os;
    os << what << ": " << values << "^" << arity << " maps exceed the enumeration cap of "
       << limits.enumeration_cap;
    throw CapExceeded(os.str());
  }
}

bool ValidationReport::has_violation(const std::string& axiom) const {
  return find(axiom) != nullptr;
}

const Violation* ValidationReport::find(const std::string& axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : structural) {
    os << (first ? "" : "; ") << "structural: " << s;
    first = false;
  }
  for (const auto& v : violations) {
    os << (first ? "" : "; ") << v.axiom << ": " << v.detail;
    first = false;
  }
  return os.str();
}

}  // namespace quantopia
