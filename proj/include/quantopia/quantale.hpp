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

#ifndef QUANTOPIA_QUANTALE_HPP_
#define QUANTOPIA_QUANTALE_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quantopia/lattice.hpp"
#include "quantopia/types.hpp"

namespace quantopia {

/// Raw multiplication table as read from a file, before any checking.
/// Element identifiers are opaque strings; the order of `elements` fixes the
/// canonical iteration order used everywhere downstream.
struct QuantaleTable {
  std::vector<std::string> elements;
  Matrix<bool> leq;
  Matrix<std::string> mul;
  std::string unit;
};

/// Checks a table against the axioms of a commutative unital quantale.
///
/// Structural problems (wrong sizes, unknown identifiers, duplicates) are
/// reported in `structural` and suppress the axiom checks. Axiom failures use
/// the lattice axiom names of validate_lattice plus: commutative, associative,
/// unit, distributive (x & (y v z) vs (x & y) v (x & z)), zero (x & 0 = 0).
/// Each failed axiom is listed once with its first witness in canonical order.
ValidationReport validate_quantale(const QuantaleTable& table);

class FiniteQuantale;
using QuantalePtr = std::shared_ptr<const FiniteQuantale>;

/// A validated finite commutative unital quantale. Elements are addressed by
/// index; join, meet, multiplication and implication are table lookups.
class FiniteQuantale {
 public:
  /// Throws StructuralError / InvalidInstance when the table does not validate.
  static QuantalePtr make(const QuantaleTable& table, std::string label = {});

  const std::string& label() const { return label_; }
  std::size_t size() const { return lattice_.size(); }
  const std::vector<std::string>& names() const { return lattice_.names(); }
  const std::string& name(Elem a) const { return lattice_.name(a); }
  std::optional<Elem> find(const std::string& name) const;
  /// Like find but throws StructuralError for unknown identifiers.
  Elem at(const std::string& name) const;

  const FiniteLattice& lattice() const { return lattice_; }

  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return join_(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_(a, b); }
  /// The residual p -> r: the largest q with p & q <= r.
  Elem impl(Elem p, Elem r) const { return impl_(p, r); }

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  Elem unit() const { return unit_; }

  Elem join_all(std::span<const Elem> xs) const;
  Elem meet_all(std::span<const Elem> xs) const;

  QuantaleTable table() const;

 private:
  FiniteQuantale() = default;

  std::string label_;
  FiniteLattice lattice_;
  Matrix<Elem> join_;
  Matrix<Elem> meet_;
  Matrix<Elem> mul_;
  Matrix<Elem> impl_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  Elem unit_ = 0;
};

/// The residual computed directly from its defining join.
Elem implication(const FiniteQuantale& q, Elem p, Elem r);

struct QuantaleProperties {
  bool is_integral = false;
  bool is_frame = false;
  std::vector<Elem> idempotents;
};

QuantaleProperties quantale_properties(const FiniteQuantale& q);

// -- Built-in finite chains -------------------------------------------------------

/// Reduced fraction label i/d, e.g. "0", "1/2", "1".
std::string fraction_label(std::size_t i, std::size_t d);

/// The Boolean quantale B2 = ({0,1}, and, 1).
QuantalePtr boolean_quantale();
/// The n-element Goedel chain {0, 1/(n-1), ..., 1} with & = min.
QuantalePtr godel_chain(std::size_t n);
/// The n-element Lukasiewicz chain with x & y = max(0, x + y - 1).
QuantalePtr mv_chain(std::size_t n);

/// A finite chain (element i named names[i], 0 bottom) carrying an ordinal sum
/// of Lukasiewicz blocks: inside a block [lo, hi] (index range) the product is
/// max(lo, i + j - hi); everywhere else it is min. Endpoints of blocks are idempotent.
QuantalePtr lukasiewicz_block_chain(std::vector<std::string> names,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
                                    std::string label = {});

/// Resolves "bool", "godel<n>", "mv<n>"; nullptr when the name is not built in.
QuantalePtr builtin_quantale(const std::string& name);

// -- Chain helpers ------------------------------------------------------------------

/// True when the underlying lattice is totally ordered.
bool is_chain(const FiniteQuantale& q);

/// For a chain: the largest idempotent <= c and the smallest idempotent >= c.
/// Both equal c when c is idempotent.
std::pair<Elem, Elem> chain_idempotent_bounds(const FiniteQuantale& q, Elem c);

}  // namespace quantopia

#endif  // QUANTOPIA_QUANTALE_HPP_
