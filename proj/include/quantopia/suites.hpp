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

#ifndef QUANTOPIA_SUITES_HPP_
#define QUANTOPIA_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantopia/interval_lab.hpp"
#include "quantopia/qtop.hpp"
#include "quantopia/report.hpp"

namespace quantopia {

/// Named verification suites. Each one cross-checks library operations
/// against each other and against closed forms over a fixed family of
/// instances, and reports one check per property.
struct SuiteInfo {
  std::string name;
  int number;
  std::string title;
};

struct SuiteOptions {
  Limits limits;
  GridSpec grid;
  std::uint64_t seed = 20260514;
  std::size_t random_instances = 100;
};

const std::vector<SuiteInfo>& suite_catalog();
/// Looks a suite up by name or by number ("1".."9").
std::optional<SuiteInfo> find_suite(const std::string& key);
/// Throws PreconditionError for unknown names.
RunReport run_suite(const std::string& key, const SuiteOptions& options = {});

// -- Shared fixture families ---------------------------------------------------------

/// B2, godel_chain(n) and mv_chain(n) for 3 <= n <= max_n, deduplicated.
std::vector<QuantalePtr> chain_fixtures(std::size_t max_n);

/// All Q-orders on carriers of size 1..max_n.
std::vector<QOrderedSet> small_qorders(const QuantalePtr& q, std::size_t max_n,
                                       const Limits& limits = {});

/// Seeded random Q-orders with carriers of size 2..max_n.
std::vector<QOrderedSet> random_qorders(const QuantalePtr& q, std::size_t count,
                                        std::size_t max_n, std::uint64_t seed);

/// The F-domains of the Scott pipeline: (Q, alpha_L) for Goedel3/4 and L3/4,
/// and FX for every two-point Q-order X over B2.
std::vector<std::pair<std::string, QOrderedSet>> scott_pipeline_instances(const Limits& limits = {});

/// Spaces used for the sobriety-structure checks, each with a short label.
std::vector<std::pair<std::string, QTopSpace>> sobriety_fixture_spaces(std::uint64_t seed,
                                                                       const Limits& limits = {});

/// Mutated table: the product a & b replaced by v; or the order cell (a, b)
/// flipped when v is empty.
QuantaleTable mutate_table(const QuantaleTable& t, std::size_t a, std::size_t b,
                           std::optional<std::string> v);

/// Re-evaluates a reported violation on the raw table; true when the witness
/// really breaks the named axiom.
bool witness_confirms(const QuantaleTable& t, const Violation& v);

/// The five-element chain {0, p, m, q, 1} with a Lukasiewicz block on {p, m, q}.
QuantalePtr mixed_chain5();

}  // namespace quantopia

#endif  // QUANTOPIA_SUITES_HPP_
