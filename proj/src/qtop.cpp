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

#include "quantopia/qtop.hpp"

#include <algorithm>
#include <set>

namespace quantopia {
namespace {

QFun pointwise_meet(const FiniteQuantale& q, const QFun& f, const QFun& g) {
  QFun out(f.values);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = q.meet(f[i], g[i]);
  return out;
}

QFun pointwise_join(const FiniteQuantale& q, const QFun& f, const QFun& g) {
  QFun out(f.values);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = q.join(f[i], g[i]);
  return out;
}

QFun scale(const FiniteQuantale& q, const QFun& f, Elem r) {
  QFun out(f.values);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = q.mul(f[i], r);
  return out;
}

std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace

std::optional<std::size_t> QTopSpace::index_of(const QFun& f) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), f);
  if (it == opens.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - opens.begin());
}

QTopSpace make_space(QuantalePtr q, std::vector<std::string> carrier, std::vector<QFun> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return QTopSpace{std::move(q), std::move(carrier), std::move(opens)};
}

ValidationReport validate_topology(const QTopSpace& t) {
  ValidationReport report;
  if (!t.quantale) {
    report.structural.push_back("space without a quantale");
    return report;
  }
  const auto& q = *t.quantale;
  const std::size_t n = t.size();
  for (const auto& f : t.opens) {
    if (f.size() != n) {
      report.structural.push_back("an open set has " + std::to_string(f.size()) +
                                  " values for " + std::to_string(n) + " points");
      return report;
    }
    for (Elem e : f.values) {
      if (e >= q.size()) {
        report.structural.push_back("an open set takes a value outside the quantale");
        return report;
      }
    }
  }
  const QFun top = constant_fun(n, q.top());
  const QFun bottom = constant_fun(n, q.bottom());
  if (!t.is_open(top)) report.violations.push_back({"O1", {render(q, top)}, "constant top is not open"});
  for (std::size_t i = 0; i < t.opens.size() && !report.has_violation("O2"); ++i) {
    for (std::size_t j = i + 1; j < t.opens.size(); ++j) {
      if (!t.is_open(pointwise_meet(q, t.opens[i], t.opens[j]))) {
        report.violations.push_back({"O2",
                                     {render(q, t.opens[i]), render(q, t.opens[j])},
                                     "meet of two opens is not open"});
        break;
      }
    }
  }
  if (!t.is_open(bottom)) {
    report.violations.push_back({"O3", {}, "the empty join (constant bottom) is not open"});
  }
  for (std::size_t i = 0; i < t.opens.size() && !report.has_violation("O3"); ++i) {
    for (std::size_t j = i + 1; j < t.opens.size(); ++j) {
      if (!t.is_open(pointwise_join(q, t.opens[i], t.opens[j]))) {
        report.violations.push_back({"O3",
                                     {render(q, t.opens[i]), render(q, t.opens[j])},
                                     "join of two opens is not open"});
        break;
      }
    }
  }
  for (const auto& f : t.opens) {
    for (Elem r = 0; r < q.size(); ++r) {
      if (!t.is_open(scale(q, f, r))) {
        report.violations.push_back({"O4", {render(q, f), q.name(r)}, "lambda & r is not open"});
        return report;
      }
    }
  }
  return report;
}

QTopSpace generate_topology(QuantalePtr q, std::vector<std::string> carrier,
                            const std::vector<QFun>& subbasis, const Limits& limits) {
  const std::size_t n = carrier.size();
  std::set<QFun> known;
  std::vector<QFun> all;
  auto add = [&](QFun f) {
    if (known.insert(f).second) {
      all.push_back(std::move(f));
      if (all.size() > limits.enumeration_cap) {
        throw CapExceeded("topology generation exceeds the enumeration cap of " +
                          std::to_string(limits.enumeration_cap) + " opens");
      }
    }
  };
  add(constant_fun(n, q->top()));
  add(constant_fun(n, q->bottom()));
  for (const auto& f : subbasis) {
    if (f.size() != n) throw StructuralError("subbasis element has the wrong number of values");
    for (Elem e : f.values) {
      if (e >= q->size()) throw StructuralError("subbasis element takes a value outside the quantale");
    }
    add(f);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (Elem r = 0; r < q->size(); ++r) add(scale(*q, all[i], r));
    for (std::size_t j = 0; j < i; ++j) {
      add(pointwise_meet(*q, all[i], all[j]));
      add(pointwise_join(*q, all[i], all[j]));
    }
  }
  return make_space(std::move(q), std::move(carrier), std::move(all));
}

QFun interior(const QTopSpace& t, const QFun& lambda) {
  const auto& q = *t.quantale;
  QFun out = constant_fun(t.size(), q.bottom());
  for (const auto& mu : t.opens) {
    bool below = true;
    for (std::size_t i = 0; i < mu.size() && below; ++i) below = q.leq(mu[i], lambda[i]);
    if (below) out = pointwise_join(q, out, mu);
  }
  return out;
}

bool is_continuous(const QTopSpace& from, const QTopSpace& to, const PointMap& f) {
  if (f.size() != from.size()) throw PreconditionError("is_continuous: map has wrong arity");
  for (Point p : f) {
    if (p >= to.size()) throw PreconditionError("is_continuous: map leaves the codomain");
  }
  QFun pulled(std::vector<Elem>(from.size()));
  for (const auto& lambda : to.opens) {
    for (std::size_t i = 0; i < f.size(); ++i) pulled[i] = lambda[f[i]];
    if (!from.is_open(pulled)) return false;
  }
  return true;
}

QOrderedSet specialization(const QTopSpace& t) {
  const auto& q = *t.quantale;
  const std::size_t n = t.size();
  Matrix<Elem> m(n, n, q.top());
  for (const auto& lambda : t.opens) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) m(a, b) = q.meet(m(a, b), q.impl(lambda[a], lambda[b]));
    }
  }
  return QOrderedSet(t.quantale, t.carrier, std::move(m));
}

bool is_t0(const QTopSpace& t) { return is_separated(specialization(t)); }

QFun constant_fun(std::size_t n, Elem value) { return QFun(std::vector<Elem>(n, value)); }

QTopSpace constants_space(QuantalePtr q, std::size_t n) {
  std::vector<QFun> opens;
  for (Elem r = 0; r < q->size(); ++r) opens.push_back(constant_fun(n, r));
  return make_space(std::move(q), point_names(n), std::move(opens));
}

QTopSpace full_space(QuantalePtr q, std::size_t n, const Limits& limits) {
  auto opens = all_maps(*q, n, limits);
  return make_space(std::move(q), point_names(n), std::move(opens));
}

QTopSpace sierpinski(QuantalePtr q) {
  QFun id(std::vector<Elem>(q->size()));
  for (Elem e = 0; e < q->size(); ++e) id[e] = e;
  auto names = q->names();
  return generate_topology(std::move(q), std::move(names), {id});
}

std::vector<QFun> sierpinski_family(const FiniteQuantale& q) {
  std::set<QFun> family;
  const std::size_t n = q.size();
  QFun f{std::vector<Elem>(n)};
  for (Elem a = 0; a < n; ++a) {
    for (Elem r = 0; r < n; ++r) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem t = 0; t < n; ++t) f[t] = q.meet(q.join(a, q.mul(t, r)), b);
        family.insert(f);
      }
    }
  }
  return {family.begin(), family.end()};
}

bool is_scott_open(const QOrderedSet& x, const FlatIdealSet& fx, const QFun& psi) {
  if (!is_coweight(x, psi)) return false;
  const auto& q = x.quantale();
  for (const auto& phi : fx.ideals) {
    auto s = weight_sup(x, phi);
    if (s && !q.leq(psi[*s], pitchfork(q, phi, psi))) return false;
  }
  return true;
}

ScottSpace scott_topology(const QOrderedSet& x, const FlatIdealSet& fx, const Limits& limits) {
  const auto& q = x.quantale();
  // Suprema are fixed per ideal; precompute them once.
  std::vector<std::pair<const QFun*, Point>> with_sup;
  for (const auto& phi : fx.ideals) {
    if (auto s = weight_sup(x, phi)) with_sup.emplace_back(&phi, *s);
  }
  std::vector<QFun> opens;
  for (auto& psi : coweights(x, limits)) {
    bool open = true;
    for (const auto& [phi, s] : with_sup) {
      if (!q.leq(psi[s], pitchfork(q, *phi, psi))) {
        open = false;
        break;
      }
    }
    if (open) opens.push_back(std::move(psi));
  }
  return ScottSpace{x, make_space(x.quantale_ptr(), x.carrier(), std::move(opens))};
}

ScottSpace scott_topology(const QOrderedSet& x, const Limits& limits) {
  return scott_topology(x, flat_ideals(x, limits), limits);
}

}  // namespace quantopia
