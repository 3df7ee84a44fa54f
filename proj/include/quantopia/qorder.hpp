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

#ifndef QUANTOPIA_QORDER_HPP_
#define QUANTOPIA_QORDER_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quantopia/lattice.hpp"
#include "quantopia/quantale.hpp"
#include "quantopia/types.hpp"

namespace quantopia {

/// Axioms: reflexive (X(x,x) >= k) and transitive (X(y,z) & X(x,y) <= X(x,z)).
ValidationReport validate_qorder(const FiniteQuantale& q, const std::vector<std::string>& carrier,
                                 const Matrix<Elem>& order);

/// A finite set with a Q-valued order X(x,y).
class QOrderedSet {
 public:
  /// Throws StructuralError / InvalidInstance when validate_qorder fails.
  QOrderedSet(QuantalePtr q, std::vector<std::string> carrier, Matrix<Elem> order);

  const FiniteQuantale& quantale() const { return *q_; }
  const QuantalePtr& quantale_ptr() const { return q_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& name(Point x) const { return carrier_[x]; }
  std::optional<Point> find(const std::string& name) const;

  Elem operator()(Point x, Point y) const { return order_(x, y); }
  const Matrix<Elem>& matrix() const { return order_; }

  bool operator==(const QOrderedSet& o) const {
    return q_ == o.q_ && carrier_ == o.carrier_ && order_ == o.order_;
  }

 private:
  QuantalePtr q_;
  std::vector<std::string> carrier_;
  Matrix<Elem> order_;
};

// -- Constructors ---------------------------------------------------------------------

/// (Q, alpha_L) with alpha_L(x,y) = x -> y.
QOrderedSet alpha_L(QuantalePtr q);
/// (Q, alpha_R) with alpha_R(x,y) = y -> x.
QOrderedSet alpha_R(QuantalePtr q);
QOrderedSet opposite(const QOrderedSet& x);
/// X(x,x) = k and X(x,y) = 0 otherwise.
QOrderedSet discrete_qorder(QuantalePtr q, std::size_t n);
/// Every entry equal to the top element.
QOrderedSet indiscrete_qorder(QuantalePtr q, std::size_t n);
/// Renders a function as "(v0,v1,...)" using element names.
std::string render(const FiniteQuantale& q, const QFun& f);
/// The family `funs` ordered by the inclusion order sub_X.
QOrderedSet sub_qorder(QuantalePtr q, const std::vector<QFun>& funs);
/// Q^X for |X| = n with the inclusion order sub_X.
QOrderedSet inclusion_qorder(QuantalePtr q, std::size_t n, const Limits& limits = {});

// -- Basic structure --------------------------------------------------------------------

Matrix<bool> underlying_order(const QOrderedSet& x);
bool is_isomorphic(const QOrderedSet& x, Point a, Point b);
bool is_separated(const QOrderedSet& x);

/// sub(f, g) = meet over x of f(x) -> g(x). Throws PreconditionError when the
/// functions live on carriers of different sizes.
Elem sub_order(const FiniteQuantale& q, const QFun& f, const QFun& g);

/// The representable weight X(-, x).
QFun yoneda(const QOrderedSet& x, Point a);
/// The representable coweight X(a, -).
QFun coyoneda(const QOrderedSet& x, Point a);

bool is_weight(const QOrderedSet& x, const QFun& phi);
bool is_coweight(const QOrderedSet& x, const QFun& psi);

/// All |Q|^n maps in lexicographic order (last coordinate fastest).
std::vector<QFun> all_maps(const FiniteQuantale& q, std::size_t n, const Limits& limits = {});
std::vector<QFun> weights(const QOrderedSet& x, const Limits& limits = {});
std::vector<QFun> coweights(const QOrderedSet& x, const Limits& limits = {});

// -- Maps ---------------------------------------------------------------------------------

/// A map between carriers, given extensionally: entry i is the image of point i.
using PointMap = std::vector<Point>;

bool preserves_order(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f);
/// f^->(phi)(y) = join over x of phi(x) & Y(y, f(x)). Throws PreconditionError
/// when f does not preserve the Q-order.
QFun pushforward(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f, const QFun& phi);
/// f^<-(psi) = psi o f, with the same order-preservation check.
QFun pullback(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f, const QFun& psi);

/// All |Y|^|X| maps in lexicographic order.
std::vector<PointMap> all_point_maps(std::size_t from, std::size_t to, const Limits& limits = {});

// -- Suprema, infima, tensors --------------------------------------------------------------

/// The first point a (carrier order) with X(a,y) = sub(phi, X(-,y)) for all y.
std::optional<Point> weight_sup(const QOrderedSet& x, const QFun& phi);
/// The first point a with X(y,a) = sub(psi, X(y,-)) for all y.
std::optional<Point> coweight_inf(const QOrderedSet& x, const QFun& psi);
/// Every enumerated weight has a supremum.
bool is_cocomplete(const QOrderedSet& x, const Limits& limits = {});
/// Cocompleteness decided without enumerating weights: all tensors exist and
/// every finite subset has a conical join X(s,y) = meet over members X(m,y).
bool is_tensored_and_conically_cocomplete(const QOrderedSet& x);

/// The first point t with X(t,y) = r -> X(a,y) for all y.
std::optional<Point> tensor(const QOrderedSet& x, Elem r, Point a);

struct AdjointCheck {
  bool holds = true;
  /// First (x, y) with Y(f(x), y) != X(x, g(y)).
  std::optional<std::pair<Point, Point>> witness;
};

/// f -| g: Y(f(x), y) = X(x, g(y)) for all x, y.
AdjointCheck is_adjoint(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f,
                        const PointMap& g);
/// Both maps preserve Q-order and f(x) <= y iff x <= g(y) in the underlying orders.
bool adjoint_by_characterization(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f,
                                 const PointMap& g);

// -- Q-modules ------------------------------------------------------------------------------

/// A complete lattice with a Q-action; action(r, x) is r (x) x.
struct QModule {
  QuantalePtr quantale;
  FiniteLattice lattice;
  Matrix<Point> action;

  std::size_t size() const { return lattice.size(); }
  Point act(Elem r, Point x) const { return action(r, x); }

  bool operator==(const QModule& o) const {
    return quantale == o.quantale && lattice == o.lattice && action == o.action;
  }
};

/// Axioms: unit (k (x) x = x), compatible (s (x) (r (x) x) = (s & r) (x) x),
/// join_right (r (x) - preserves binary joins and bottom), join_left
/// (- (x) x preserves binary joins and sends 0 to bottom).
ValidationReport validate_module(const QModule& m);
/// Throws InvalidInstance when validate_module fails.
QModule make_module(QuantalePtr q, FiniteLattice lattice, Matrix<Point> action);

/// Q acting on itself by multiplication.
QModule self_module(QuantalePtr q);
/// Q^X with the pointwise lattice and action r (x) f = r & f.
QModule power_module(QuantalePtr q, std::size_t n, const Limits& limits = {});

/// alpha(x,y) = join of { r : r (x) x <= y }.
QOrderedSet module_to_qlattice(const QModule& m);
/// Underlying lattice plus tensors. Throws PreconditionError unless X is
/// separated and cocomplete.
QModule qlattice_to_module(const QOrderedSet& x);

// -- Enumeration of small Q-orders -------------------------------------------------------------

/// All Q-orders on an n-point carrier named x0..x{n-1}, in lexicographic
/// matrix order.
std::vector<QOrderedSet> enumerate_qorders(QuantalePtr q, std::size_t n, const Limits& limits = {});

/// A random Q-order: random entries closed up under reflexivity and transitivity.
QOrderedSet random_qorder(QuantalePtr q, std::size_t n, std::mt19937_64& rng);

}  // namespace quantopia

#endif  // QUANTOPIA_QORDER_HPP_
