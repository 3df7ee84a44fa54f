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

#include "quantopia/flat.hpp"

#include <algorithm>
#include <map>

namespace quantopia {

Elem pitchfork(const FiniteQuantale& q, const QFun& phi, const QFun& psi) {
  if (phi.size() != psi.size()) throw PreconditionError("pitchfork: carrier sizes differ");
  Elem v = q.bottom();
  for (std::size_t i = 0; i < phi.size(); ++i) v = q.join(v, q.mul(phi[i], psi[i]));
  return v;
}

bool is_inhabited(const FiniteQuantale& q, const QFun& phi) {
  Elem v = q.bottom();
  for (Elem e : phi.values) v = q.join(v, e);
  return q.leq(q.unit(), v);
}

FlatTester::FlatTester(const QOrderedSet& x, const Limits& limits)
    : x_(x), coweights_(quantopia::coweights(x, limits)) {
  const auto& q = x_.quantale();
  const std::size_t c = coweights_.size();
  std::map<QFun, std::uint32_t> index;
  for (std::size_t i = 0; i < c; ++i) index.emplace(coweights_[i], static_cast<std::uint32_t>(i));
  meet_index_ = Matrix<std::uint32_t>(c, c, 0);
  QFun m(std::vector<Elem>(x_.size()));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      for (std::size_t t = 0; t < x_.size(); ++t) m[t] = q.meet(coweights_[i][t], coweights_[j][t]);
      meet_index_(i, j) = index.at(m);
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> FlatTester::meet_witness(const QFun& phi) const {
  const auto& q = x_.quantale();
  const std::size_t c = coweights_.size();
  std::vector<Elem> pitch(c);
  for (std::size_t i = 0; i < c; ++i) pitch[i] = pitchfork(q, phi, coweights_[i]);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (pitch[meet_index_(i, j)] != q.meet(pitch[i], pitch[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool FlatTester::is_flat(const QFun& phi) const {
  return is_inhabited(x_.quantale(), phi) && !meet_witness(phi);
}

FlatVerdict check_flat(const QOrderedSet& x, const QFun& phi, const Limits& limits) {
  FlatTester tester(x, limits);
  FlatVerdict v;
  v.inhabited = is_inhabited(x.quantale(), phi);
  if (auto w = tester.meet_witness(phi)) {
    v.witness = std::make_pair(tester.coweights()[w->first], tester.coweights()[w->second]);
  }
  v.flat = v.inhabited && !v.witness;
  return v;
}

bool is_flat(const QOrderedSet& x, const QFun& phi, const Limits& limits) {
  return check_flat(x, phi, limits).flat;
}

std::optional<std::size_t> FlatIdealSet::index_of(const QFun& phi) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), phi);
  if (it == ideals.end() || *it != phi) return std::nullopt;
  return static_cast<std::size_t>(it - ideals.begin());
}

FlatIdealSet flat_ideals(const QOrderedSet& x, const Limits& limits) {
  FlatTester tester(x, limits);
  std::vector<QFun> ideals;
  for (auto& phi : weights(x, limits)) {
    if (tester.is_flat(phi)) ideals.push_back(std::move(phi));
  }
  QOrderedSet order = sub_qorder(x.quantale_ptr(), ideals);
  return FlatIdealSet{std::move(ideals), std::move(order)};
}

Matrix<Elem> way_below(const QOrderedSet& x, const FlatIdealSet& fx) {
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  Matrix<Elem> w(n, n, q.top());
  for (const auto& phi : fx.ideals) {
    auto s = weight_sup(x, phi);
    if (!s) continue;
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) w(a, b) = q.meet(w(a, b), q.impl(x(b, *s), phi[a]));
    }
  }
  return w;
}

Matrix<Elem> way_below(const QOrderedSet& x, const Limits& limits) {
  return way_below(x, flat_ideals(x, limits));
}

std::optional<WayBelowFailure> way_below_properties(const QOrderedSet& x, const Matrix<Elem>& w) {
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      if (!q.leq(w(a, b), x(a, b))) return WayBelowFailure{"below-order", {a, b}};
    }
  }
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      for (Point c = 0; c < n; ++c) {
        if (!q.leq(q.mul(w(b, c), x(a, b)), w(a, c))) return WayBelowFailure{"left-weight", {a, b, c}};
        if (!q.leq(q.mul(x(c, a), w(b, c)), w(b, a))) {
          return WayBelowFailure{"right-coweight", {b, c, a}};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_f_cocomplete(const QOrderedSet& x, const FlatIdealSet& fx) {
  return std::all_of(fx.ideals.begin(), fx.ideals.end(),
                     [&](const QFun& phi) { return weight_sup(x, phi).has_value(); });
}

bool is_f_cocomplete(const QOrderedSet& x, const Limits& limits) {
  return is_f_cocomplete(x, flat_ideals(x, limits));
}

FDomainCertificate is_f_domain(const QOrderedSet& x, const Limits& limits) {
  FDomainCertificate cert;
  cert.separated = is_separated(x);
  const FlatIdealSet fx = flat_ideals(x, limits);
  cert.f_cocomplete = is_f_cocomplete(x, fx);
  cert.way_below = way_below(x, fx);
  for (Point a = 0; a < x.size(); ++a) {
    QFun col(std::vector<Elem>(x.size()));
    for (Point t = 0; t < x.size(); ++t) col[t] = cert.way_below(t, a);
    cert.lower.push_back(std::move(col));
  }
  if (!cert.separated) {
    cert.reason = "not separated";
    return cert;
  }
  if (!cert.f_cocomplete) {
    cert.reason = "some flat ideal has no supremum";
    return cert;
  }
  for (Point a = 0; a < x.size(); ++a) {
    const QFun& lo = cert.lower[a];
    if (!fx.index_of(lo)) {
      cert.reason = is_weight(x, lo) ? "w(-,x) is not a flat ideal" : "w(-,x) is not a weight";
      cert.point = a;
      return cert;
    }
    auto s = weight_sup(x, lo);
    if (!s || !is_isomorphic(x, *s, a)) {
      cert.reason = "w(-,x) does not have supremum x";
      cert.point = a;
      return cert;
    }
  }
  cert.holds = true;
  return cert;
}

std::optional<std::array<Point, 2>> interpolation_check(const QOrderedSet& x,
                                                        const Matrix<Elem>& w) {
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      Elem v = q.bottom();
      for (Point z = 0; z < n; ++z) v = q.join(v, q.mul(w(z, b), w(a, z)));
      if (v != w(a, b)) return std::array<Point, 2>{a, b};
    }
  }
  return std::nullopt;
}

bool frame_ideal_condition(const QOrderedSet& x, const QFun& phi) {
  const auto& q = x.quantale();
  if (!is_inhabited(q, phi)) return false;
  const std::size_t n = x.size();
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      Elem v = q.bottom();
      for (Point z = 0; z < n; ++z) v = q.join(v, q.meet(phi[z], q.meet(x(a, z), x(b, z))));
      if (q.meet(phi[a], phi[b]) != v) return false;
    }
  }
  return true;
}

}  // namespace quantopia
