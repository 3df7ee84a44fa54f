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

#ifndef QUANTOPIA_TESTS_ORACLE_HPP_
#define QUANTOPIA_TESTS_ORACLE_HPP_

// Brute-force reference implementations used only by the test suite. They
// read nothing but the raw order and multiplication tables and recompute
// every derived operation (joins, meets, residuals, suprema) from scratch.

#include <cstdint>
#include <optional>
#include <vector>

#include "quantopia/qorder.hpp"
#include "quantopia/tnorm.hpp"

namespace oracle {

using quantopia::Elem;
using quantopia::FiniteQuantale;
using quantopia::Point;
using quantopia::QFun;
using quantopia::QModule;
using quantopia::QOrderedSet;
using quantopia::QuantaleTable;
using quantopia::TNorm;

/// Every quantale axiom, with joins taken over all subsets of the table.
bool quantale_valid(const QuantaleTable& t);

/// Join and meet of a set of elements, straight from the order relation.
Elem join(const FiniteQuantale& q, const std::vector<Elem>& xs);
Elem meet(const FiniteQuantale& q, const std::vector<Elem>& xs);
/// The largest q with p & q <= r, searched over all elements.
Elem implication(const FiniteQuantale& q, Elem p, Elem r);

bool is_weight(const QOrderedSet& x, const QFun& phi);
bool is_coweight(const QOrderedSet& x, const QFun& psi);
/// All functions from an n-point carrier into q, by counting in base |q|.
std::vector<QFun> all_functions(const FiniteQuantale& q, std::size_t n);

Elem sub(const FiniteQuantale& q, const QFun& f, const QFun& g);
std::optional<Point> sup(const QOrderedSet& x, const QFun& phi);

/// Flat ideals by the definition: inhabited weights whose pairing with
/// coweights preserves all binary meets.
std::vector<QFun> flat_ideals(const QOrderedSet& x);
/// Scott-open coweights by the defining inequality.
std::vector<QFun> scott_opens(const QOrderedSet& x, const std::vector<QFun>& flats);

/// The F-domain definition, evaluated with the functions above.
bool is_f_domain(const QOrderedSet& x);

/// Y(f x, y) = X(x, g y) for all x, y.
bool is_adjoint(const QOrderedSet& x, const QOrderedSet& y, const std::vector<Point>& f,
                const std::vector<Point>& g);

/// All points of a module by brute force over every map into Q; nullopt when
/// |Q|^|M| exceeds the bound.
std::optional<std::vector<QFun>> points(const QModule& m, std::uint64_t bound);

/// r meet - preserves the action and binary joins on (Q, &).
bool meet_is_homomorphism(const FiniteQuantale& q, Elem r);

/// Sampled residual on an n-point grid.
double grid_residuum(const TNorm& t, double x, double y, std::size_t n);

/// Pointwise minimum over candidate flat ideals t -> [t = 0] v (u meet (t -> a))
/// with idempotent u, grid a, and supremum u meet a at least x.
std::vector<double> d_envelope(const TNorm& t, double x, std::size_t n);

}  // namespace oracle

#endif  // QUANTOPIA_TESTS_ORACLE_HPP_
