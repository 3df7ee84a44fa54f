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

#ifndef QUANTOPIA_LATTICE_HPP_
#define QUANTOPIA_LATTICE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quantopia/types.hpp"

namespace quantopia {

/// Checks that `leq` is a partial order on `names.size()` elements in which
/// every pair has a join and a meet and a bottom and top exist. For a finite
/// poset this is equivalent to being a complete lattice.
/// Axiom names used in the report: reflexive, antisymmetric, transitive,
/// bottom, top, join, meet.
ValidationReport validate_lattice(const std::vector<std::string>& names, const Matrix<bool>& leq);

/// A finite complete lattice with precomputed join and meet tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  /// Throws InvalidInstance if validate_lattice reports a violation.
  FiniteLattice(std::vector<std::string> names, const Matrix<bool>& leq);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Point a) const { return names_[a]; }
  std::optional<Point> find(const std::string& name) const;

  bool leq(Point a, Point b) const { return leq_(a, b) != 0; }
  Point join(Point a, Point b) const { return join_(a, b); }
  Point meet(Point a, Point b) const { return meet_(a, b); }
  Point bottom() const { return bottom_; }
  Point top() const { return top_; }

  Point join_all(std::span<const Point> xs) const;
  Point meet_all(std::span<const Point> xs) const;

  /// Elements with exactly one lower cover: the non-bottom j that are not the
  /// join of the elements strictly below them. Ascending by downset size.
  const std::vector<Point>& join_irreducibles() const { return join_irreducibles_; }

  Matrix<bool> leq_matrix() const;

  bool operator==(const FiniteLattice& o) const {
    return names_ == o.names_ && leq_ == o.leq_;
  }

 private:
  std::vector<std::string> names_;
  Matrix<std::uint8_t> leq_;
  Matrix<Point> join_;
  Matrix<Point> meet_;
  Point bottom_ = 0;
  Point top_ = 0;
  std::vector<Point> join_irreducibles_;
};

}  // namespace quantopia

#endif  // QUANTOPIA_LATTICE_HPP_
