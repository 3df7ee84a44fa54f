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

#include "quantopia/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace quantopia {
namespace {

// Least upper bound of {a, b} under leq, if one exists.
std::optional<Point> find_join(const Matrix<bool>& leq, Point a, Point b) {
  const std::size_t n = leq.rows();
  std::optional<Point> best;
  for (Point u = 0; u < n; ++u) {
    if (!leq(a, u) || !leq(b, u)) continue;
    if (!best || leq(u, *best)) {
      best = u;
    }
  }
  if (!best) return std::nullopt;
  for (Point u = 0; u < n; ++u) {
    if (leq(a, u) && leq(b, u) && !leq(*best, u)) return std::nullopt;
  }
  return best;
}

std::optional<Point> find_meet(const Matrix<bool>& leq, Point a, Point b) {
  const std::size_t n = leq.rows();
  std::optional<Point> best;
  for (Point u = 0; u < n; ++u) {
    if (!leq(u, a) || !leq(u, b)) continue;
    if (!best || leq(*best, u)) {
      best = u;
    }
  }
  if (!best) return std::nullopt;
  for (Point u = 0; u < n; ++u) {
    if (leq(u, a) && leq(u, b) && !leq(u, *best)) return std::nullopt;
  }
  return best;
}

}  // namespace

ValidationReport validate_lattice(const std::vector<std::string>& names, const Matrix<bool>& leq) {
  ValidationReport report;
  const std::size_t n = names.size();
  if (n == 0) {
    report.structural.push_back("element list is empty");
    return report;
  }
  if (leq.rows() != n || leq.cols() != n) {
    report.structural.push_back("order matrix is not " + std::to_string(n) + "x" +
                                std::to_string(n));
    return report;
  }
  auto add = [&](std::string axiom, std::vector<std::string> witness, std::string detail) {
    if (!report.has_violation(axiom)) {
      report.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    }
  };
  for (Point a = 0; a < n; ++a) {
    if (!leq(a, a)) add("reflexive", {names[a]}, "not " + names[a] + " <= " + names[a]);
  }
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      if (leq(a, b) && leq(b, a)) {
        add("antisymmetric", {names[a], names[b]},
            names[a] + " <= " + names[b] + " and " + names[b] + " <= " + names[a]);
      }
    }
  }
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      for (Point c = 0; c < n; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          add("transitive", {names[a], names[b], names[c]},
              names[a] + " <= " + names[b] + " <= " + names[c] + " but not " + names[a] +
                  " <= " + names[c]);
        }
      }
    }
  }
  if (!report.ok()) return report;

  bool has_bottom = false;
  bool has_top = false;
  for (Point u = 0; u < n; ++u) {
    bool below_all = true;
    bool above_all = true;
    for (Point v = 0; v < n; ++v) {
      below_all = below_all && leq(u, v);
      above_all = above_all && leq(v, u);
    }
    has_bottom = has_bottom || below_all;
    has_top = has_top || above_all;
  }
  if (!has_bottom) add("bottom", {}, "no least element (empty join missing)");
  if (!has_top) add("top", {}, "no greatest element (empty meet missing)");
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      if (!find_join(leq, a, b)) {
        add("join", {names[a], names[b]}, names[a] + " and " + names[b] + " have no join");
      }
      if (!find_meet(leq, a, b)) {
        add("meet", {names[a], names[b]}, names[a] + " and " + names[b] + " have no meet");
      }
    }
  }
  return report;
}

FiniteLattice::FiniteLattice(std::vector<std::string> names, const Matrix<bool>& leq)
    : names_(std::move(names)) {
  const ValidationReport report = validate_lattice(names_, leq);
  if (!report.structural.empty()) throw StructuralError("lattice: " + report.summary());
  if (!report.ok()) throw InvalidInstance("not a complete lattice: " + report.summary());

  const std::size_t n = names_.size();
  leq_ = Matrix<std::uint8_t>(n, n, 0);
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) leq_(a, b) = leq(a, b) ? 1 : 0;
  }
  join_ = Matrix<Point>(n, n, 0);
  meet_ = Matrix<Point>(n, n, 0);
  for (Point a = 0; a < n; ++a) {
    for (Point b = a; b < n; ++b) {
      const Point j = *find_join(leq, a, b);
      const Point m = *find_meet(leq, a, b);
      join_(a, b) = join_(b, a) = j;
      meet_(a, b) = meet_(b, a) = m;
    }
  }
  for (Point u = 0; u < n; ++u) {
    bool below_all = true;
    bool above_all = true;
    for (Point v = 0; v < n; ++v) {
      below_all = below_all && leq(u, v);
      above_all = above_all && leq(v, u);
    }
    if (below_all) bottom_ = u;
    if (above_all) top_ = u;
  }

  std::vector<std::size_t> downset(n, 0);
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) downset[a] += leq_(b, a);
  }
  for (Point j = 0; j < n; ++j) {
    if (j == bottom_) continue;
    Point below = bottom_;
    for (Point b = 0; b < n; ++b) {
      if (b != j && leq_(b, j)) below = join_(below, b);
    }
    if (below != j) join_irreducibles_.push_back(j);
  }
  std::stable_sort(join_irreducibles_.begin(), join_irreducibles_.end(),
                   [&](Point a, Point b) { return downset[a] < downset[b]; });
}

std::optional<Point> FiniteLattice::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Point>(it - names_.begin());
}

Point FiniteLattice::join_all(std::span<const Point> xs) const {
  Point acc = bottom_;
  for (Point x : xs) acc = join_(acc, x);
  return acc;
}

Point FiniteLattice::meet_all(std::span<const Point> xs) const {
  Point acc = top_;
  for (Point x : xs) acc = meet_(acc, x);
  return acc;
}

Matrix<bool> FiniteLattice::leq_matrix() const {
  Matrix<bool> m(size(), size(), false);
  for (Point a = 0; a < size(); ++a) {
    for (Point b = 0; b < size(); ++b) m(a, b) = leq_(a, b) != 0;
  }
  return m;
}

}  // namespace quantopia
