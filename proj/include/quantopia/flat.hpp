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

#ifndef QUANTOPIA_FLAT_HPP_
#define QUANTOPIA_FLAT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quantopia/qorder.hpp"

namespace quantopia {

/// phi pitchfork psi = join over x of phi(x) & psi(x).
Elem pitchfork(const FiniteQuantale& q, const QFun& phi, const QFun& psi);

/// join of phi(x) >= k.
bool is_inhabited(const FiniteQuantale& q, const QFun& phi);

/// Decides flatness of many weights on one Q-ordered set. The coweights and
/// their pointwise meets are enumerated once.
class FlatTester {
 public:
  explicit FlatTester(const QOrderedSet& x, const Limits& limits = {});

  const QOrderedSet& base() const { return x_; }
  const std::vector<QFun>& coweights() const { return coweights_; }

  /// Inhabited, and pitchfork preserves the meet of every ordered coweight pair.
  bool is_flat(const QFun& phi) const;
  /// First ordered pair (psi1, psi2) of coweight indices breaking flatness;
  /// nullopt when the meet condition holds for all pairs.
  std::optional<std::pair<std::size_t, std::size_t>> meet_witness(const QFun& phi) const;

 private:
  QOrderedSet x_;
  std::vector<QFun> coweights_;
  Matrix<std::uint32_t> meet_index_;
};

struct FlatVerdict {
  bool flat = false;
  bool inhabited = false;
  /// A coweight pair on which the pitchfork fails to preserve the meet.
  std::optional<std::pair<QFun, QFun>> witness;
};

FlatVerdict check_flat(const QOrderedSet& x, const QFun& phi, const Limits& limits = {});
bool is_flat(const QOrderedSet& x, const QFun& phi, const Limits& limits = {});

/// The flat ideals of X in canonical (lexicographic) order, and FX: the same
/// family under the inclusion order.
struct FlatIdealSet {
  std::vector<QFun> ideals;
  QOrderedSet order;

  std::optional<std::size_t> index_of(const QFun& phi) const;
};

FlatIdealSet flat_ideals(const QOrderedSet& x, const Limits& limits = {});

/// w(x,y) = meet over flat ideals phi having a supremum of X(y, sup phi) -> phi(x).
Matrix<Elem> way_below(const QOrderedSet& x, const Limits& limits = {});
Matrix<Elem> way_below(const QOrderedSet& x, const FlatIdealSet& fx);

/// Name of the first failing basic property of w ("below-order", "left-weight",
/// "right-coweight") with its witness points, or nullopt when all hold.
struct WayBelowFailure {
  std::string property;
  std::vector<Point> points;
};
std::optional<WayBelowFailure> way_below_properties(const QOrderedSet& x, const Matrix<Elem>& w);

bool is_f_cocomplete(const QOrderedSet& x, const Limits& limits = {});
bool is_f_cocomplete(const QOrderedSet& x, const FlatIdealSet& fx);

struct FDomainCertificate {
  bool holds = false;
  bool separated = false;
  bool f_cocomplete = false;
  /// x -> w(-,x), when computed.
  std::vector<QFun> lower;
  Matrix<Elem> way_below;
  /// Failure reason and offending point for not-holding results.
  std::string reason;
  std::optional<Point> point;
};

/// Separated, F-cocomplete, and each w(-,x) is a flat ideal with supremum x.
FDomainCertificate is_f_domain(const QOrderedSet& x, const Limits& limits = {});

/// w(x,y) = join over z of w(z,y) & w(x,z). Returns the first failing
/// (x, y) pair, or nullopt.
std::optional<std::array<Point, 2>> interpolation_check(const QOrderedSet& x,
                                                        const Matrix<Elem>& w);

/// Inhabited and phi(x) meet phi(y) = join over z of phi(z) meet X(x,z) meet X(y,z).
bool frame_ideal_condition(const QOrderedSet& x, const QFun& phi);

}  // namespace quantopia

#endif  // QUANTOPIA_FLAT_HPP_
