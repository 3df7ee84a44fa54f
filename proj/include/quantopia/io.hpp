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

#ifndef QUANTOPIA_IO_HPP_
#define QUANTOPIA_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quantopia/qorder.hpp"
#include "quantopia/qtop.hpp"
#include "quantopia/quantale.hpp"
#include "quantopia/tnorm.hpp"
#include "quantopia/types.hpp"

namespace quantopia {

using Json = nlohmann::ordered_json;

/// The input could not be read or is not valid JSON.
class ParseError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

Json read_json_file(const std::filesystem::path& path);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);
/// Digest of the canonical serialization of a JSON value.
std::string digest(const Json& j);

// -- Quantales ------------------------------------------------------------------

/// {"elements": [...], "leq": [[bool...]...], "mul": [[elem...]...], "unit": elem}.
/// Numbers are accepted wherever an element identifier is expected.
QuantaleTable quantale_table_from_json(const Json& j);
Json quantale_to_json(const FiniteQuantale& q);

/// A built-in name, an inline table, or (for strings that are not built in)
/// a file path resolved against base_dir.
QuantalePtr quantale_from_json(const Json& j, const std::filesystem::path& base_dir = {});
/// A built-in name or a file path.
QuantalePtr resolve_quantale(const std::string& spec);

// -- T-norms --------------------------------------------------------------------

/// {"pieces": [{"kind": "lukasiewicz"|"product", "lo": a, "hi": b}, ...]}.
TNorm tnorm_from_json(const Json& j, std::string label = {});
Json tnorm_to_json(const TNorm& t);
/// A built-in t-norm name or a file path.
TNorm resolve_tnorm(const std::string& spec);

// -- Q-ordered sets and functions -------------------------------------------------

/// The parsed parts of a Q-order file, before any axiom is checked.
struct RawQOrder {
  QuantalePtr quantale;
  std::vector<std::string> carrier;
  Matrix<Elem> order;
};
RawQOrder raw_qorder_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"quantale": name-or-inline, "carrier": [...], "order": [[elem...]...]}.
/// Throws InvalidInstance when the matrix is not a Q-order.
QOrderedSet qorder_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json qorder_to_json(const QOrderedSet& x);

/// {"values": {point: elem}}, a bare {point: elem} object, or an array of elements
/// in carrier order. Every point must receive exactly one value.
QFun qfun_from_json(const FiniteQuantale& q, const std::vector<std::string>& carrier,
                    const Json& j);
/// {point: elem} in carrier order.
Json qfun_to_json(const FiniteQuantale& q, const std::vector<std::string>& carrier,
                  const QFun& f);

// -- Spaces ---------------------------------------------------------------------

/// {"quantale": ..., "carrier": [...], "opens": [{point: elem}...]}, or with
/// "subbasis" in place of "opens" for a generated topology.
QTopSpace space_from_json(const Json& j, const std::filesystem::path& base_dir = {},
                          const Limits& limits = {});
Json space_to_json(const QTopSpace& t);

}  // namespace quantopia

#endif  // QUANTOPIA_IO_HPP_
