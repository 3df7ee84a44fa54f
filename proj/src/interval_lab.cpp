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

#include "quantopia/interval_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace quantopia {
namespace {

void require_grid(const GridSpec& grid) {
  if (grid.points < 2) throw PreconditionError("grid needs at least two points");
}

std::string number_label(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

IntervalWeight::IntervalWeight(TNorm t, Kind kind, Variance variance, IntervalOrder order,
                               std::function<double(double)> eval, std::string label)
    : t_(std::move(t)),
      kind_(kind),
      variance_(variance),
      order_(order),
      eval_(std::move(eval)),
      label_(std::move(label)) {}

IntervalWeight IntervalWeight::representable(const TNorm& t, double a, Variance variance,
                                             IntervalOrder order) {
  if (!(a >= 0.0 && a <= 1.0)) throw PreconditionError("representable: point outside [0,1]");
  std::function<double(double)> f;
  if (variance == Variance::coweight) {
    f = [t, a, order](double s) { return interval_order(t, order, a, s); };
  } else {
    f = [t, a, order](double s) { return interval_order(t, order, s, a); };
  }
  return IntervalWeight(t, Kind::representable, variance, order, std::move(f),
                        "representable(" + number_label(a) + ")");
}

IntervalWeight IntervalWeight::sampled(const TNorm& t, std::vector<double> values,
                                       Variance variance, IntervalOrder order) {
  if (values.size() < 2) throw PreconditionError("sampled: need at least two samples");
  auto f = [v = std::move(values)](double s) {
    const double pos = s * static_cast<double>(v.size() - 1);
    const std::size_t i = std::min(static_cast<std::size_t>(std::floor(pos)), v.size() - 2);
    const double frac = pos - static_cast<double>(i);
    if (frac <= 0.0) return v[i];
    if (frac >= 1.0) return v[i + 1];
    return v[i] + frac * (v[i + 1] - v[i]);
  };
  return IntervalWeight(t, Kind::sampled, variance, order, std::move(f), "sampled");
}

IntervalWeight IntervalWeight::formula(const TNorm& t, std::function<double(double)> f,
                                       Variance variance, IntervalOrder order, std::string label) {
  return IntervalWeight(t, Kind::formula, variance, order, std::move(f), std::move(label));
}

std::vector<double> IntervalWeight::on_grid(const GridSpec& grid) const {
  require_grid(grid);
  std::vector<double> out(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) out[i] = eval_(grid.at(i));
  return out;
}

double interval_order(const TNorm& t, IntervalOrder order, double x, double y) {
  return order == IntervalOrder::alpha_L ? t.implication(x, y) : t.implication(y, x);
}

double weight_defect(const IntervalWeight& f, const GridSpec& grid) {
  const auto v = f.on_grid(grid);
  const TNorm& t = f.tnorm();
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.points; ++i) {
    for (std::size_t j = 0; j < grid.points; ++j) {
      const double xy = interval_order(t, f.order(), grid.at(i), grid.at(j));
      // weight: f(y) & X(x,y) <= f(x); coweight: f(x) & X(x,y) <= f(y).
      const double lhs = f.variance() == Variance::coweight ? t.eval(v[i], xy) : t.eval(v[j], xy);
      const double rhs = f.variance() == Variance::coweight ? v[j] : v[i];
      worst = std::max(worst, lhs - rhs);
    }
  }
  return worst;
}

double grid_residuum(const TNorm& t, double x, double y, std::size_t points) {
  GridSpec grid;
  grid.points = points;
  require_grid(grid);
  double best = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double q = grid.at(i);
    if (t.eval(x, q) <= y + 1e-12) best = std::max(best, q);
  }
  return best;
}

IntervalWeight d_ideal(const TNorm& t, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw PreconditionError("d_ideal: point outside [0,1]");
  const double xplus = idempotent_bounds(t, x).second;
  auto f = [t, x, xplus](double s) {
    if (x == 0.0) return t.implication(s, 0.0);
    if (s == 0.0) return 1.0;
    return std::min(xplus, t.implication(s, x));
  };
  return IntervalWeight(t, IntervalWeight::Kind::smallest, Variance::weight, IntervalOrder::alpha_L,
                        std::move(f), "d(" + number_label(x) + ")");
}

FlatCharacterization archimedean_flat_characterization(const TNorm& t, const IntervalWeight& phi,
                                                       const GridSpec& grid) {
  if (!t.is_archimedean()) {
    throw PreconditionError("archimedean_flat_characterization: t-norm is not Archimedean");
  }
  require_grid(grid);
  FlatCharacterization out;
  const double a = phi(1.0);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double s = grid.at(i);
    out.max_error = std::max(out.max_error, std::fabs(phi(s) - t.implication(s, a)));
  }
  out.flat = out.max_error <= grid.closed_tolerance;
  if (out.flat) out.a = a;
  return out;
}

GridVerdict scott_open_alphaL(const TNorm& t, const IntervalWeight& psi, const GridSpec& grid) {
  require_grid(grid);
  const IntervalWeight as_coweight = IntervalWeight::formula(
      t, [&psi](double s) { return psi(s); }, Variance::coweight, IntervalOrder::alpha_L, psi.label());
  if (weight_defect(as_coweight, grid) > grid.closed_tolerance) {
    throw PreconditionError("scott_open_alphaL: not a coweight of ([0,1], alpha_L)");
  }
  const double tol = grid.closed_tolerance;
  const double at0 = psi(0.0);
  for (std::size_t i = 1; i < grid.points; ++i) {
    const double x = grid.at(i);
    const double xplus = idempotent_bounds(t, x).second;
    const double v = psi(x);
    if (v > xplus + tol && std::fabs(v - at0) > tol) {
      std::ostringstream os;
      os << "psi(" << x << ") = " << v << " exceeds x+ = " << xplus << " but differs from psi(0) = "
         << at0;
      return GridVerdict{false, x, os.str()};
    }
  }
  return GridVerdict{};
}

bool domain_condition(const TNorm& t) {
  return std::all_of(t.pieces().begin(), t.pieces().end(), [](const TNormPiece& p) {
    return p.kind != PieceKind::lukasiewicz || p.lo == 0.0;
  });
}

bool sierpinski_equals_scott(const TNorm& t) { return t.pieces().empty(); }

IntervalWeight counterexample_open(const TNorm& t, double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw PreconditionError("counterexample_open: point outside [0,1]");
  if (t.is_idempotent(c)) throw PreconditionError("counterexample_open: c is idempotent");
  const auto [lo, hi] = idempotent_bounds(t, c);
  auto f = [t, c, lo = lo, hi = hi](double x) {
    return std::min(std::max(t.implication(c, lo), t.implication(c, x)), hi);
  };
  return IntervalWeight::formula(t, std::move(f), Variance::coweight, IntervalOrder::alpha_L,
                                 "counterexample(" + number_label(c) + ")");
}

std::optional<FamilyParameters> sierpinski_family_member(const TNorm& t,
                                                         const std::function<double(double)>& lambda,
                                                         const GridSpec& grid) {
  require_grid(grid);
  const double tol = grid.closed_tolerance;
  const double a = lambda(0.0);
  const double b = lambda(1.0);
  auto fits = [&](double r) {
    for (std::size_t i = 0; i < grid.points; ++i) {
      const double s = grid.at(i);
      if (std::fabs(std::min(std::max(a, t.eval(s, r)), b) - lambda(s)) > tol) return false;
    }
    return true;
  };
  std::vector<double> candidates = {0.0, a, b, 1.0};
  for (std::size_t i = 1; i + 1 < grid.points; ++i) {
    const double s = grid.at(i);
    const double v = lambda(s);
    if (v > a + tol && v < b - tol) candidates.push_back(t.implication(s, v));
  }
  for (double r : candidates) {
    if (r >= 0.0 && r <= 1.0 && fits(r)) return FamilyParameters{a, r, b};
  }
  return std::nullopt;
}

bool alphaR_f_domain(const TNorm& t) { return t.is_archimedean(); }

AlphaRReport alphaR_coweight_checks(const TNorm& t, const IntervalWeight& psi,
                                    std::optional<double> b, const GridSpec& grid) {
  require_grid(grid);
  const IntervalWeight as_coweight = IntervalWeight::formula(
      t, [&psi](double s) { return psi(s); }, Variance::coweight, IntervalOrder::alpha_R, psi.label());
  if (weight_defect(as_coweight, grid) > grid.closed_tolerance) {
    throw PreconditionError("alphaR_coweight_checks: not a coweight of ([0,1], alpha_R)");
  }
  const double tol = grid.closed_tolerance;
  AlphaRReport rep;
  const auto v = psi.on_grid(grid);
  const double at1 = psi(1.0);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.at(i);
    const double xminus = idempotent_bounds(t, x).first;
    if (v[i] <= xminus + tol && std::fabs(v[i] - at1) > tol && rep.fl_i) {
      rep.fl_i = false;
      rep.witness = x;
    }
    if (t.is_idempotent(x) && v[i] >= x - tol && at1 < x - tol && rep.fl_ii) {
      rep.fl_ii = false;
      if (!rep.witness) rep.witness = x;
    }
  }
  if (!b) {
    for (const auto& p : t.pieces()) {
      for (double e : {p.lo, p.hi}) {
        if (e > 0.0 && e < 1.0 && (!b || e < *b)) b = e;
      }
    }
    for (std::size_t i = 1; i + 1 < grid.points; ++i) {
      const double x = grid.at(i);
      if (t.is_idempotent(x) && (!b || x < *b)) b = x;
    }
  }
  rep.b = b;
  if (b) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    if (*hi - *lo > tol) {
      for (std::size_t i = 0; i < grid.points; ++i) {
        if (v[i] > *b + tol) {
          rep.open_bound = false;
          if (!rep.witness) rep.witness = grid.at(i);
          break;
        }
      }
    }
  }
  return rep;
}

// -- Finite analogues -------------------------------------------------------------------

QuantalePtr finite_skeleton(const TNorm& t) {
  std::set<double> pts = {0.0, 1.0};
  for (const auto& p : t.pieces()) {
    if (p.kind != PieceKind::lukasiewicz) continue;
    pts.insert(p.lo);
    pts.insert(p.hi);
    pts.insert((p.lo + p.hi) / 2.0);
  }
  const bool interior_idempotent =
      std::any_of(pts.begin(), pts.end(), [&](double x) { return x > 0.0 && x < 1.0 && t.is_idempotent(x); });
  if (!interior_idempotent && !t.is_archimedean()) pts.insert(0.5);
  const std::vector<double> xs(pts.begin(), pts.end());
  std::vector<std::string> names;
  for (double x : xs) names.push_back(number_label(x));
  auto index = [&](double x) {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (const auto& p : t.pieces()) {
    if (p.kind == PieceKind::lukasiewicz) blocks.emplace_back(index(p.lo), index(p.hi));
  }
  return lukasiewicz_block_chain(std::move(names), blocks, "skeleton(" + t.label() + ")");
}

QFun d_ideal_finite(const FiniteQuantale& q, Elem x) {
  const Elem xplus = chain_idempotent_bounds(q, x).second;
  QFun d(std::vector<Elem>(q.size()));
  for (Elem s = 0; s < q.size(); ++s) {
    if (x == q.bottom()) {
      d[s] = q.impl(s, q.bottom());
    } else if (s == q.bottom()) {
      d[s] = q.top();
    } else {
      d[s] = q.meet(xplus, q.impl(s, x));
    }
  }
  return d;
}

std::optional<std::pair<Elem, Elem>> d_order_failure(const FiniteQuantale& q) {
  std::vector<QFun> d;
  for (Elem x = 0; x < q.size(); ++x) d.push_back(d_ideal_finite(q, x));
  for (Elem s = 0; s < q.size(); ++s) {
    for (Elem p = 0; p < q.size(); ++p) {
      if (!q.leq(q.impl(s, p), sub_order(q, d[s], d[p]))) return std::make_pair(s, p);
    }
  }
  return std::nullopt;
}

bool scott_open_alphaL_finite(const FiniteQuantale& q, const QFun& psi) {
  for (Elem x = 0; x < q.size(); ++x) {
    if (x == q.bottom()) continue;
    const Elem xplus = chain_idempotent_bounds(q, x).second;
    if (!q.leq(psi[x], xplus) && psi[x] != psi[q.bottom()]) return false;
  }
  return true;
}

QFun counterexample_open_finite(const FiniteQuantale& q, Elem c) {
  const auto [lo, hi] = chain_idempotent_bounds(q, c);
  if (lo == c) throw PreconditionError("counterexample_open_finite: c is idempotent");
  QFun f(std::vector<Elem>(q.size()));
  for (Elem x = 0; x < q.size(); ++x) f[x] = q.meet(q.join(q.impl(c, lo), q.impl(c, x)), hi);
  return f;
}

}  // namespace quantopia
