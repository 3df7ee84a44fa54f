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

#ifndef QUANTOPIA_QTOP_HPP_
#define QUANTOPIA_QTOP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "quantopia/flat.hpp"
#include "quantopia/qorder.hpp"

namespace quantopia {

/// A finite carrier with an explicit family of open Q-valued functions.
/// `opens` is kept sorted and free of duplicates.
struct QTopSpace {
  QuantalePtr quantale;
  std::vector<std::string> carrier;
  std::vector<QFun> opens;

  std::size_t size() const { return carrier.size(); }
  std::optional<std::size_t> index_of(const QFun& f) const;
  bool is_open(const QFun& f) const { return index_of(f).has_value(); }

  bool operator==(const QTopSpace& o) const {
    return quantale == o.quantale && carrier == o.carrier && opens == o.opens;
  }
};

/// Sorts and deduplicates the opens; no axiom checks.
QTopSpace make_space(QuantalePtr q, std::vector<std::string> carrier, std::vector<QFun> opens);

/// Axioms O1 (constant top), O2 (binary meets), O3 (binary joins and the
/// constant bottom), O4 (lambda & r); each with the first offending opens.
ValidationReport validate_topology(const QTopSpace& t);

/// The smallest family containing `subbasis` and closed under O1-O4.
QTopSpace generate_topology(QuantalePtr q, std::vector<std::string> carrier,
                            const std::vector<QFun>& subbasis, const Limits& limits = {});

/// Join of the opens below lambda.
QFun interior(const QTopSpace& t, const QFun& lambda);

/// Every open of `to`, precomposed with f, is open in `from`.
bool is_continuous(const QTopSpace& from, const QTopSpace& to, const PointMap& f);

/// Omega(x,y) = meet over opens of lambda(x) -> lambda(y).
QOrderedSet specialization(const QTopSpace& t);
bool is_t0(const QTopSpace& t);

QFun constant_fun(std::size_t n, Elem value);

/// Constant opens only.
QTopSpace constants_space(QuantalePtr q, std::size_t n);
/// Every map is open.
QTopSpace full_space(QuantalePtr q, std::size_t n, const Limits& limits = {});

/// Q as carrier, topology generated by the identity.
QTopSpace sierpinski(QuantalePtr q);
/// The maps (a v (id & r)) meet b on Q, for all a, r, b.
std::vector<QFun> sierpinski_family(const FiniteQuantale& q);

struct ScottSpace {
  QOrderedSet base;
  QTopSpace space;
};

/// A coweight psi with psi(sup phi) <= phi pitchfork psi for every flat ideal
/// phi having a supremum.
bool is_scott_open(const QOrderedSet& x, const FlatIdealSet& fx, const QFun& psi);

/// Opens are the Scott-open coweights of x.
ScottSpace scott_topology(const QOrderedSet& x, const Limits& limits = {});
ScottSpace scott_topology(const QOrderedSet& x, const FlatIdealSet& fx, const Limits& limits = {});

}  // namespace quantopia

#endif  // QUANTOPIA_QTOP_HPP_
