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

#ifndef QUANTOPIA_TNORM_HPP_
#define QUANTOPIA_TNORM_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quantopia {

/// Comparison tolerance for closed-form real arithmetic.
inline constexpr double kClosedFormTolerance = 1e-9;

enum class PieceKind { lukasiewicz, product };

struct TNormPiece {
  PieceKind kind;
  double lo;
  double hi;

  bool operator==(const TNormPiece&) const = default;
};

/// A continuous t-norm on [0,1] given as an ordinal sum: on each piece
/// [lo, hi] it is a rescaled copy of the Lukasiewicz or product t-norm, and
/// outside all pieces it is the minimum. No pieces means the Goedel t-norm.
class TNorm {
 public:
  /// Pieces are sorted by lo; throws PreconditionError when a piece is empty,
  /// leaves [0,1], or overlaps the interior of another piece.
  explicit TNorm(std::vector<TNormPiece> pieces = {}, std::string label = {});

  static TNorm godel() { return TNorm({}, "godel"); }
  static TNorm product() { return TNorm({{PieceKind::product, 0.0, 1.0}}, "product"); }
  static TNorm lukasiewicz() { return TNorm({{PieceKind::lukasiewicz, 0.0, 1.0}}, "lukasiewicz"); }

  const std::vector<TNormPiece>& pieces() const { return pieces_; }
  const std::string& label() const { return label_; }

  /// x & y. Throws PreconditionError for arguments outside [0,1].
  double eval(double x, double y) const;
  /// x -> y, the residual of eval, from the piecewise closed forms.
  double implication(double x, double y) const;

  /// The piece whose interior contains c, if any.
  std::optional<TNormPiece> piece_containing(double c) const;
  bool is_idempotent(double c) const { return !piece_containing(c).has_value(); }
  /// One piece covering all of [0,1].
  bool is_archimedean() const;

  bool operator==(const TNorm& o) const { return pieces_ == o.pieces_; }

 private:
  std::vector<TNormPiece> pieces_;
  std::string label_;
};

double tnorm_eval(const TNorm& t, double x, double y);
double tnorm_implication(const TNorm& t, double x, double y);

/// (c-, c+): the endpoints of the piece enclosing a non-idempotent c, and
/// (c, c) when c is idempotent.
std::pair<double, double> idempotent_bounds(const TNorm& t, double c);

/// The six reference t-norms: godel, product, lukasiewicz, luk-prod
/// (L on [0,1/2], P on [1/2,1]), prod-luk (P on [0,1/2], L on [1/2,1]) and
/// mix3 (L on [0,0.3], P on [0.3,0.6], L on [0.7,1]).
std::vector<TNorm> fixture_tnorms();
std::optional<TNorm> builtin_tnorm(const std::string& name);

}  // namespace quantopia

#endif  // QUANTOPIA_TNORM_HPP_
