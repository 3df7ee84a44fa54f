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

#ifndef QUANTOPIA_INTERVAL_LAB_HPP_
#define QUANTOPIA_INTERVAL_LAB_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quantopia/flat.hpp"
#include "quantopia/qorder.hpp"
#include "quantopia/qtop.hpp"
#include "quantopia/tnorm.hpp"

namespace quantopia {

enum class IntervalOrder { alpha_L, alpha_R };

/// Grid resolution and tolerances for sampled checks on [0,1].
struct GridSpec {
  std::size_t points = 101;
  /// Tolerance for quantities defined via suprema; 1.5 / points by default.
  std::optional<double> sup_tolerance;
  /// Tolerance for closed-form comparisons.
  double closed_tolerance = kClosedFormTolerance;

  double sup_tol() const { return sup_tolerance.value_or(1.5 / static_cast<double>(points)); }
  double at(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(points - 1); }
};

/// A Q-valued function on [0,1] for a t-norm, tagged with how it arose.
class IntervalWeight {
 public:
  enum class Kind { representable, smallest, sampled, formula };

  IntervalWeight(TNorm t, Kind kind, Variance variance, IntervalOrder order,
                 std::function<double(double)> eval, std::string label);

  /// t -> X(t,a) for a weight, t -> X(a,t) for a coweight.
  static IntervalWeight representable(const TNorm& t, double a, Variance variance,
                                      IntervalOrder order = IntervalOrder::alpha_L);
  /// Values at the grid points i/(n-1), linearly interpolated in between.
  static IntervalWeight sampled(const TNorm& t, std::vector<double> values, Variance variance,
                                IntervalOrder order = IntervalOrder::alpha_L);
  static IntervalWeight formula(const TNorm& t, std::function<double(double)> f, Variance variance,
                                IntervalOrder order, std::string label);

  const TNorm& tnorm() const { return t_; }
  Kind kind() const { return kind_; }
  Variance variance() const { return variance_; }
  IntervalOrder order() const { return order_; }
  const std::string& label() const { return label_; }

  double operator()(double t) const { return eval_(t); }
  std::vector<double> on_grid(const GridSpec& grid) const;

 private:
  TNorm t_;
  Kind kind_;
  Variance variance_;
  IntervalOrder order_;
  std::function<double(double)> eval_;
  std::string label_;
};

/// X(x,y) on [0,1]: x -> y for alpha_L, y -> x for alpha_R.
double interval_order(const TNorm& t, IntervalOrder order, double x, double y);

/// Largest error in the weight (or coweight) inequality over grid pairs.
double weight_defect(const IntervalWeight& f, const GridSpec& grid);

/// Sampled residuation: the join of grid points q with x & q <= y.
double grid_residuum(const TNorm& t, double x, double y, std::size_t points);

/// The smallest flat ideal of ([0,1], alpha_L) with supremum at least x.
IntervalWeight d_ideal(const TNorm& t, double x);

struct FlatCharacterization {
  bool flat = false;
  /// The a with phi = alpha_L(-,a), when one exists.
  std::optional<double> a;
  double max_error = 0.0;
};

/// For Archimedean T: phi is flat iff it equals some alpha_L(-,a) on the grid
/// within the closed-form tolerance. Throws PreconditionError otherwise.
FlatCharacterization archimedean_flat_characterization(const TNorm& t, const IntervalWeight& phi,
                                                       const GridSpec& grid = {});

struct GridVerdict {
  bool holds = true;
  std::optional<double> witness;
  std::string detail;
};

/// For a coweight psi of ([0,1], alpha_L): psi(x) > x+ implies psi(x) = psi(0)
/// for every grid x in (0,1]. Throws PreconditionError when psi is not a coweight.
GridVerdict scott_open_alphaL(const TNorm& t, const IntervalWeight& psi, const GridSpec& grid = {});

/// Every Lukasiewicz piece starts at 0.
bool domain_condition(const TNorm& t);

/// T has no pieces (the Goedel t-norm).
bool sierpinski_equals_scott(const TNorm& t);

/// lambda(x) = ((c -> c-) v (c -> x)) meet c+. Throws PreconditionError for idempotent c.
IntervalWeight counterexample_open(const TNorm& t, double c);

struct FamilyParameters {
  double a;
  double r;
  double b;
};

/// Parameters (a, r, b) with lambda = (a v (id & r)) meet b on the grid, if any:
/// a = lambda(0), b = lambda(1), and r is solved from the samples.
std::optional<FamilyParameters> sierpinski_family_member(const TNorm& t,
                                                         const std::function<double(double)>& lambda,
                                                         const GridSpec& grid = {});

/// T is Archimedean.
bool alphaR_f_domain(const TNorm& t);

struct AlphaRReport {
  bool fl_i = true;
  bool fl_ii = true;
  bool open_bound = true;
  /// Nontrivial idempotent used for the bound, if T has one.
  std::optional<double> b;
  std::optional<double> witness;
  bool ok() const { return fl_i && fl_ii && open_bound; }
};

/// For a coweight psi of ([0,1], alpha_R): if psi(x) <= x- then psi(x) = psi(1);
/// for idempotent x with psi(x) >= x, psi(1) >= x; and when T has a nontrivial
/// idempotent b, a non-constant psi stays below b. Without an explicit b the
/// smallest nontrivial idempotent on the grid is used.
AlphaRReport alphaR_coweight_checks(const TNorm& t, const IntervalWeight& psi,
                                    std::optional<double> b = std::nullopt,
                                    const GridSpec& grid = {});

// -- Finite analogues -------------------------------------------------------------------

/// The finite chain model of T: 0, 1, piece endpoints and a midpoint of each
/// Lukasiewicz piece, with those pieces as exact blocks. Product pieces have no
/// finite model and become idempotent stretches; a T without interior
/// endpoints gets the extra idempotent 1/2 unless it is Archimedean.
QuantalePtr finite_skeleton(const TNorm& t);

/// d(x) on a finite chain: t -> 0 for x = 0, 1 at t = 0, x+ meet (t -> x) otherwise.
QFun d_ideal_finite(const FiniteQuantale& q, Elem x);

/// The (t, p) where d: (Q, alpha_L) -> FX fails to preserve the Q-order, i.e.
/// X(t,p) is not below sub(d(t), d(p)); nullopt when d preserves it.
std::optional<std::pair<Elem, Elem>> d_order_failure(const FiniteQuantale& q);

/// The finite criterion: for x > 0, psi(x) not below x+ implies psi(x) = psi(0).
bool scott_open_alphaL_finite(const FiniteQuantale& q, const QFun& psi);

/// The counterexample open set on a finite chain for non-idempotent c.
QFun counterexample_open_finite(const FiniteQuantale& q, Elem c);

}  // namespace quantopia

#endif  // QUANTOPIA_INTERVAL_LAB_HPP_
