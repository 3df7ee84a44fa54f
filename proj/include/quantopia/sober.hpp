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

#ifndef QUANTOPIA_SOBER_HPP_
#define QUANTOPIA_SOBER_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quantopia/qorder.hpp"
#include "quantopia/qtop.hpp"

namespace quantopia {

/// Opens ordered pointwise, acted on by r (x) lambda = lambda & r. Module
/// element i is t.opens[i].
QModule open_set_module(const QTopSpace& t);

/// A map from module elements (by index) into Q.
using ModulePoint = QFun;

/// pt1 p(top) = 1, pt2 binary meets, pt3 binary joins and bottom, pt4 p(r (x) a) = r & p(a).
/// Returns the first failing condition name, or nullopt for a point.
std::optional<std::string> point_failure(const QModule& m, const ModulePoint& p);
bool is_point(const QModule& m, const ModulePoint& p);

struct PointSearchOptions {
  /// Enforce pt4. When false only pt1-pt3 and `fixed` are imposed.
  bool preserve_action = true;
  /// Additional constraints p(element) = value.
  std::vector<std::pair<Point, Elem>> fixed;
};

struct PointSearchResult {
  std::vector<ModulePoint> points;
  std::uint64_t nodes = 0;
};

/// Backtracking over values on join-irreducibles, extended by joins; every
/// result is rechecked in full. Sorted lexicographically.
/// Throws CapExceeded after limits.point_search_cap nodes.
PointSearchResult search_points(const QModule& m, const PointSearchOptions& options = {},
                                const Limits& limits = {});
std::vector<ModulePoint> points(const QModule& m, const Limits& limits = {});

enum class SobrietyVerdict { sober, not_t0, missing_point };
std::string to_string(SobrietyVerdict v);

struct SobrietyCertificate {
  SobrietyVerdict verdict = SobrietyVerdict::sober;
  /// eta[x](i) = opens[i](x).
  std::vector<ModulePoint> eta;
  std::vector<ModulePoint> module_points;
  /// Two carrier points with equal eta image (not_t0).
  std::optional<std::pair<Point, Point>> pair;
  /// A module point outside the image of eta (missing_point).
  std::optional<ModulePoint> missing;
};

SobrietyCertificate eta(const QTopSpace& t, const Limits& limits = {});
bool is_sober(const QTopSpace& t, const Limits& limits = {});

struct Sobrification {
  QTopSpace space;
  std::vector<ModulePoint> points;
  /// eta as a map into the new carrier.
  PointMap eta;
};

/// Carrier pt O(T), opens lambda^(p) = p(lambda).
Sobrification sobrify(const QTopSpace& t, const Limits& limits = {});

/// A bijection under which the two open families correspond.
bool is_homeomorphism(const QTopSpace& from, const QTopSpace& to, const PointMap& f);

struct SpatialityReport {
  bool spatial = false;
  std::size_t point_count = 0;
  std::string reason;
};

/// The counit lambda -> lambda^ is injective and preserves joins, meets and the action.
SpatialityReport spatiality(const QModule& m, const Limits& limits = {});
bool is_spatial(const QModule& m, const Limits& limits = {});

/// The diamond M3 over B2 with the trivial action; it has no points.
QModule diamond_module();

struct MeetHomFailure {
  /// "action": r meet (s & x) != s & (r meet x); "join": r meet (s v x) != (r meet s) v (r meet x).
  std::string condition;
  Elem r;
  Elem s;
  Elem x;
};

/// For Q over itself, the first failure of r meet - being a module
/// homomorphism; the instance s = r, x = top is tried first.
std::optional<MeetHomFailure> meet_homomorphism_failure(const FiniteQuantale& q, Elem r);

/// eta_Y(f(x))(lambda) = eta_X(x)(lambda o f) for all x and opens lambda of Y.
bool eta_natural(const QTopSpace& from, const QTopSpace& to, const PointMap& f);

}  // namespace quantopia

#endif  // QUANTOPIA_SOBER_HPP_
