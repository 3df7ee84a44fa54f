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

#include "quantopia/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quantopia/types.hpp"

namespace quantopia {
namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << what << ": argument " << x << " is outside [0,1]";
    throw PreconditionError(os.str());
  }
}

bool in_closed(const TNormPiece& p, double x) { return p.lo <= x && x <= p.hi; }

}  // namespace

TNorm::TNorm(std::vector<TNormPiece> pieces, std::string label)
    : pieces_(std::move(pieces)), label_(std::move(label)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const TNormPiece& a, const TNormPiece& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (!(p.lo >= 0.0 && p.hi <= 1.0 && p.lo < p.hi)) {
      std::ostringstream os;
      os << "t-norm piece [" << p.lo << ", " << p.hi << "] is not a nonempty subinterval of [0,1]";
      throw PreconditionError(os.str());
    }
    if (i > 0 && pieces_[i - 1].hi > p.lo) {
      throw PreconditionError("t-norm pieces overlap");
    }
  }
}

std::optional<TNormPiece> TNorm::piece_containing(double c) const {
  for (const auto& p : pieces_) {
    if (p.lo < c && c < p.hi) return p;
  }
  return std::nullopt;
}

bool TNorm::is_archimedean() const {
  return pieces_.size() == 1 && pieces_[0].lo == 0.0 && pieces_[0].hi == 1.0;
}

double TNorm::eval(double x, double y) const {
  require_unit_interval(x, "t-norm");
  require_unit_interval(y, "t-norm");
  for (const auto& p : pieces_) {
    if (!in_closed(p, x) || !in_closed(p, y)) continue;
    const double a = p.lo;
    const double b = p.hi;
    if (p.kind == PieceKind::lukasiewicz) return std::max(a, x + y - b);
    return a + (x - a) * (y - a) / (b - a);
  }
  return std::min(x, y);
}

double TNorm::implication(double x, double y) const {
  require_unit_interval(x, "implication");
  require_unit_interval(y, "implication");
  if (x <= y) return 1.0;
  for (const auto& p : pieces_) {
    if (!in_closed(p, x) || !in_closed(p, y)) continue;
    const double a = p.lo;
    const double b = p.hi;
    if (p.kind == PieceKind::lukasiewicz) return std::min(1.0, b - x + y);
    return a + (b - a) * (y - a) / (x - a);
  }
  // An idempotent separates y < x, so x & q = min(x, q) near y.
  return y;
}

double tnorm_eval(const TNorm& t, double x, double y) { return t.eval(x, y); }
double tnorm_implication(const TNorm& t, double x, double y) { return t.implication(x, y); }

std::pair<double, double> idempotent_bounds(const TNorm& t, double c) {
  require_unit_interval(c, "idempotent_bounds");
  if (auto p = t.piece_containing(c)) return {p->lo, p->hi};
  return {c, c};
}

std::vector<TNorm> fixture_tnorms() {
  return {
      TNorm::godel(),
      TNorm::product(),
      TNorm::lukasiewicz(),
      TNorm({{PieceKind::lukasiewicz, 0.0, 0.5}, {PieceKind::product, 0.5, 1.0}}, "luk-prod"),
      TNorm({{PieceKind::product, 0.0, 0.5}, {PieceKind::lukasiewicz, 0.5, 1.0}}, "prod-luk"),
      TNorm({{PieceKind::lukasiewicz, 0.0, 0.3},
             {PieceKind::product, 0.3, 0.6},
             {PieceKind::lukasiewicz, 0.7, 1.0}},
            "mix3"),
  };
}

std::optional<TNorm> builtin_tnorm(const std::string& name) {
  for (auto& t : fixture_tnorms()) {
    if (t.label() == name) return t;
  }
  return std::nullopt;
}

}  // namespace quantopia
