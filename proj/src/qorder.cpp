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

#include "quantopia/qorder.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace quantopia {
namespace {

constexpr const char* kNe = " \xE2\x89\xA0 ";  // " ≠ "

std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw PreconditionError(std::string(what) + ": carrier sizes differ (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

void require_map(const PointMap& f, std::size_t from, std::size_t to, const char* what) {
  if (f.size() != from) throw PreconditionError(std::string(what) + ": map has wrong arity");
  for (Point p : f) {
    if (p >= to) throw PreconditionError(std::string(what) + ": map leaves the codomain");
  }
}

bool transitive_closed(const FiniteQuantale& q, const Matrix<Elem>& m, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = m(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (!q.leq(q.mul(m(y, z), xy), m(x, z))) return false;
      }
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_qorder(const FiniteQuantale& q, const std::vector<std::string>& carrier,
                                 const Matrix<Elem>& order) {
  ValidationReport report;
  const std::size_t n = carrier.size();
  std::set<std::string> seen;
  for (const auto& c : carrier) {
    if (!seen.insert(c).second) report.structural.push_back("duplicate point '" + c + "'");
  }
  if (order.rows() != n || order.cols() != n) {
    report.structural.push_back("order is not " + std::to_string(n) + "x" + std::to_string(n));
    return report;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (order(x, y) >= q.size()) {
        report.structural.push_back("order[" + carrier[x] + "][" + carrier[y] +
                                    "] is not an element of the quantale");
      }
    }
  }
  if (!report.structural.empty()) return report;

  const Elem k = q.unit();
  for (std::size_t x = 0; x < n; ++x) {
    if (!q.leq(k, order(x, x))) {
      report.violations.push_back({"reflexive",
                                   {carrier[x]},
                                   "X(" + carrier[x] + "," + carrier[x] + ") = " +
                                       q.name(order(x, x)) + " is not above k"});
      break;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Elem lhs = q.mul(order(y, z), order(x, y));
        if (!q.leq(lhs, order(x, z))) {
          report.violations.push_back(
              {"transitive",
               {carrier[x], carrier[y], carrier[z]},
               "X(" + carrier[y] + "," + carrier[z] + ") & X(" + carrier[x] + "," + carrier[y] +
                   ") = " + q.name(lhs) + " is not below X(" + carrier[x] + "," + carrier[z] +
                   ") = " + q.name(order(x, z))});
          return report;
        }
      }
    }
  }
  return report;
}

QOrderedSet::QOrderedSet(QuantalePtr q, std::vector<std::string> carrier, Matrix<Elem> order)
    : q_(std::move(q)), carrier_(std::move(carrier)), order_(std::move(order)) {
  if (!q_) throw StructuralError("Q-ordered set without a quantale");
  ValidationReport r = validate_qorder(*q_, carrier_, order_);
  if (!r.structural.empty()) throw StructuralError(r.summary());
  if (!r.ok()) throw InvalidInstance(r.summary());
}

std::optional<Point> QOrderedSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (carrier_[i] == name) return static_cast<Point>(i);
  }
  return std::nullopt;
}

// -- Constructors ---------------------------------------------------------------------

QOrderedSet alpha_L(QuantalePtr q) {
  const std::size_t n = q->size();
  Matrix<Elem> m(n, n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) m(x, y) = q->impl(x, y);
  }
  auto names = q->names();
  return QOrderedSet(std::move(q), std::move(names), std::move(m));
}

QOrderedSet alpha_R(QuantalePtr q) { return opposite(alpha_L(std::move(q))); }

QOrderedSet opposite(const QOrderedSet& x) {
  const std::size_t n = x.size();
  Matrix<Elem> m(n, n);
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) m(a, b) = x(b, a);
  }
  return QOrderedSet(x.quantale_ptr(), x.carrier(), std::move(m));
}

QOrderedSet discrete_qorder(QuantalePtr q, std::size_t n) {
  Matrix<Elem> m(n, n, q->bottom());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = q->unit();
  return QOrderedSet(std::move(q), point_names(n), std::move(m));
}

QOrderedSet indiscrete_qorder(QuantalePtr q, std::size_t n) {
  Matrix<Elem> m(n, n, q->top());
  return QOrderedSet(std::move(q), point_names(n), std::move(m));
}

std::string render(const FiniteQuantale& q, const QFun& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += q.name(f[i]);
  }
  return s + ")";
}

QOrderedSet sub_qorder(QuantalePtr q, const std::vector<QFun>& funs) {
  const std::size_t n = funs.size();
  Matrix<Elem> m(n, n);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(render(*q, funs[i]));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sub_order(*q, funs[i], funs[j]);
  }
  return QOrderedSet(std::move(q), std::move(names), std::move(m));
}

QOrderedSet inclusion_qorder(QuantalePtr q, std::size_t n, const Limits& limits) {
  auto funs = all_maps(*q, n, limits);
  return sub_qorder(std::move(q), funs);
}

// -- Basic structure ------------------------------------------------------------------

Matrix<bool> underlying_order(const QOrderedSet& x) {
  const auto& q = x.quantale();
  Matrix<bool> m(x.size(), x.size(), false);
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) m(a, b) = q.leq(q.unit(), x(a, b));
  }
  return m;
}

bool is_isomorphic(const QOrderedSet& x, Point a, Point b) {
  const auto& q = x.quantale();
  return q.leq(q.unit(), x(a, b)) && q.leq(q.unit(), x(b, a));
}

bool is_separated(const QOrderedSet& x) {
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = a + 1; b < x.size(); ++b) {
      if (is_isomorphic(x, a, b)) return false;
    }
  }
  return true;
}

Elem sub_order(const FiniteQuantale& q, const QFun& f, const QFun& g) {
  require_same_size(f.size(), g.size(), "sub_order");
  Elem r = q.top();
  for (std::size_t i = 0; i < f.size(); ++i) r = q.meet(r, q.impl(f[i], g[i]));
  return r;
}

QFun yoneda(const QOrderedSet& x, Point a) {
  if (a >= x.size()) throw PreconditionError("yoneda: unknown point");
  QFun f;
  f.values.resize(x.size());
  for (Point t = 0; t < x.size(); ++t) f[t] = x(t, a);
  return f;
}

QFun coyoneda(const QOrderedSet& x, Point a) {
  if (a >= x.size()) throw PreconditionError("coyoneda: unknown point");
  QFun f;
  f.values.resize(x.size());
  for (Point t = 0; t < x.size(); ++t) f[t] = x(a, t);
  return f;
}

bool is_weight(const QOrderedSet& x, const QFun& phi) {
  if (phi.size() != x.size()) return false;
  const auto& q = x.quantale();
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) {
      if (!q.leq(q.mul(phi[b], x(a, b)), phi[a])) return false;
    }
  }
  return true;
}

bool is_coweight(const QOrderedSet& x, const QFun& psi) {
  if (psi.size() != x.size()) return false;
  const auto& q = x.quantale();
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) {
      if (!q.leq(q.mul(psi[a], x(a, b)), psi[b])) return false;
    }
  }
  return true;
}

std::vector<QFun> all_maps(const FiniteQuantale& q, std::size_t n, const Limits& limits) {
  require_enumerable(q.size(), n, limits, "map enumeration");
  const std::uint64_t count = saturating_pow(q.size(), n);
  std::vector<QFun> out;
  out.reserve(count);
  QFun cur(std::vector<Elem>(n, 0));
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++cur[pos] < q.size()) break;
      cur[pos] = 0;
    }
  }
  return out;
}

std::vector<QFun> weights(const QOrderedSet& x, const Limits& limits) {
  std::vector<QFun> out;
  for (auto& f : all_maps(x.quantale(), x.size(), limits)) {
    if (is_weight(x, f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<QFun> coweights(const QOrderedSet& x, const Limits& limits) {
  std::vector<QFun> out;
  for (auto& f : all_maps(x.quantale(), x.size(), limits)) {
    if (is_coweight(x, f)) out.push_back(std::move(f));
  }
  return out;
}

// -- Maps -------------------------------------------------------------------------------

bool preserves_order(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f) {
  require_map(f, x.size(), y.size(), "preserves_order");
  const auto& q = x.quantale();
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) {
      if (!q.leq(x(a, b), y(f[a], f[b]))) return false;
    }
  }
  return true;
}

QFun pushforward(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f, const QFun& phi) {
  require_same_size(phi.size(), x.size(), "pushforward");
  if (!preserves_order(x, y, f)) throw PreconditionError("pushforward: map does not preserve the Q-order");
  const auto& q = x.quantale();
  QFun out(std::vector<Elem>(y.size(), q.bottom()));
  for (Point b = 0; b < y.size(); ++b) {
    Elem v = q.bottom();
    for (Point a = 0; a < x.size(); ++a) v = q.join(v, q.mul(phi[a], y(b, f[a])));
    out[b] = v;
  }
  return out;
}

QFun pullback(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f, const QFun& psi) {
  require_same_size(psi.size(), y.size(), "pullback");
  if (!preserves_order(x, y, f)) throw PreconditionError("pullback: map does not preserve the Q-order");
  QFun out(std::vector<Elem>(x.size()));
  for (Point a = 0; a < x.size(); ++a) out[a] = psi[f[a]];
  return out;
}

std::vector<PointMap> all_point_maps(std::size_t from, std::size_t to, const Limits& limits) {
  require_enumerable(to, from, limits, "point-map enumeration");
  std::vector<PointMap> out;
  if (to == 0 && from > 0) return out;
  const std::uint64_t count = saturating_pow(to, from);
  out.reserve(count);
  PointMap cur(from, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    for (std::size_t pos = from; pos-- > 0;) {
      if (++cur[pos] < to) break;
      cur[pos] = 0;
    }
  }
  return out;
}

// -- Suprema, infima, tensors ----------------------------------------------------------

std::optional<Point> weight_sup(const QOrderedSet& x, const QFun& phi) {
  require_same_size(phi.size(), x.size(), "weight_sup");
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  std::vector<Elem> target(n);
  for (Point b = 0; b < n; ++b) {
    Elem v = q.top();
    for (Point t = 0; t < n; ++t) v = q.meet(v, q.impl(phi[t], x(t, b)));
    target[b] = v;
  }
  for (Point a = 0; a < n; ++a) {
    bool match = true;
    for (Point b = 0; b < n && match; ++b) match = x(a, b) == target[b];
    if (match) return a;
  }
  return std::nullopt;
}

std::optional<Point> coweight_inf(const QOrderedSet& x, const QFun& psi) {
  require_same_size(psi.size(), x.size(), "coweight_inf");
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  std::vector<Elem> target(n);
  for (Point b = 0; b < n; ++b) {
    Elem v = q.top();
    for (Point t = 0; t < n; ++t) v = q.meet(v, q.impl(psi[t], x(b, t)));
    target[b] = v;
  }
  for (Point a = 0; a < n; ++a) {
    bool match = true;
    for (Point b = 0; b < n && match; ++b) match = x(b, a) == target[b];
    if (match) return a;
  }
  return std::nullopt;
}

bool is_cocomplete(const QOrderedSet& x, const Limits& limits) {
  for (const auto& phi : weights(x, limits)) {
    if (!weight_sup(x, phi)) return false;
  }
  return true;
}

bool is_tensored_and_conically_cocomplete(const QOrderedSet& x) {
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  if (n == 0) return false;
  for (Elem r = 0; r < q.size(); ++r) {
    for (Point a = 0; a < n; ++a) {
      if (!tensor(x, r, a)) return false;
    }
  }
  auto has_row = [&](const std::vector<Elem>& target) {
    for (Point s = 0; s < n; ++s) {
      bool match = true;
      for (Point y = 0; y < n && match; ++y) match = x(s, y) == target[y];
      if (match) return true;
    }
    return false;
  };
  if (!has_row(std::vector<Elem>(n, q.top()))) return false;
  std::vector<Elem> target(n);
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      for (Point y = 0; y < n; ++y) target[y] = q.meet(x(a, y), x(b, y));
      if (!has_row(target)) return false;
    }
  }
  return true;
}

std::optional<Point> tensor(const QOrderedSet& x, Elem r, Point a) {
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  for (Point t = 0; t < n; ++t) {
    bool match = true;
    for (Point y = 0; y < n && match; ++y) match = x(t, y) == q.impl(r, x(a, y));
    if (match) return t;
  }
  return std::nullopt;
}

AdjointCheck is_adjoint(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f,
                        const PointMap& g) {
  require_map(f, x.size(), y.size(), "is_adjoint");
  require_map(g, y.size(), x.size(), "is_adjoint");
  AdjointCheck out;
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < y.size(); ++b) {
      if (y(f[a], b) != x(a, g[b])) {
        out.holds = false;
        out.witness = std::make_pair(a, b);
        return out;
      }
    }
  }
  return out;
}

bool adjoint_by_characterization(const QOrderedSet& x, const QOrderedSet& y, const PointMap& f,
                                 const PointMap& g) {
  if (!preserves_order(x, y, f) || !preserves_order(y, x, g)) return false;
  const auto& q = x.quantale();
  const Elem k = q.unit();
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < y.size(); ++b) {
      if (q.leq(k, y(f[a], b)) != q.leq(k, x(a, g[b]))) return false;
    }
  }
  return true;
}

// -- Q-modules ----------------------------------------------------------------------------

ValidationReport validate_module(const QModule& m) {
  ValidationReport report;
  if (!m.quantale) {
    report.structural.push_back("module without a quantale");
    return report;
  }
  const auto& q = *m.quantale;
  const auto& l = m.lattice;
  if (l.size() == 0) report.structural.push_back("module lattice is empty");
  if (m.action.rows() != q.size() || m.action.cols() != l.size()) {
    report.structural.push_back("action table is not " + std::to_string(q.size()) + "x" +
                                std::to_string(l.size()));
  }
  if (report.structural.empty()) {
    for (Elem r = 0; r < q.size(); ++r) {
      for (Point a = 0; a < l.size(); ++a) {
        if (m.action(r, a) >= l.size()) {
          report.structural.push_back("action[" + q.name(r) + "][" + l.name(a) +
                                      "] is not a lattice element");
        }
      }
    }
  }
  if (!report.structural.empty()) return report;

  auto add = [&](std::string axiom, std::vector<std::string> witness, std::string detail) {
    if (!report.has_violation(axiom)) {
      report.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    }
  };
  const Elem k = q.unit();
  for (Point a = 0; a < l.size(); ++a) {
    if (m.act(k, a) != a) add("unit", {l.name(a)}, "k \xE2\x8A\x97 " + l.name(a) + kNe + l.name(a));
  }
  for (Elem s = 0; s < q.size(); ++s) {
    for (Elem r = 0; r < q.size(); ++r) {
      for (Point a = 0; a < l.size(); ++a) {
        if (m.act(s, m.act(r, a)) != m.act(q.mul(s, r), a)) {
          add("compatible", {q.name(s), q.name(r), l.name(a)},
              "s \xE2\x8A\x97 (r \xE2\x8A\x97 x)" + std::string(kNe) + "(s & r) \xE2\x8A\x97 x");
        }
      }
    }
  }
  for (Elem r = 0; r < q.size(); ++r) {
    if (m.act(r, l.bottom()) != l.bottom()) {
      add("join_right", {q.name(r), l.name(l.bottom())}, "r \xE2\x8A\x97 bottom is not bottom");
    }
    for (Point a = 0; a < l.size(); ++a) {
      for (Point b = a + 1; b < l.size(); ++b) {
        if (m.act(r, l.join(a, b)) != l.join(m.act(r, a), m.act(r, b))) {
          add("join_right", {q.name(r), l.name(a), l.name(b)},
              "r \xE2\x8A\x97 (x v y)" + std::string(kNe) + "(r \xE2\x8A\x97 x) v (r \xE2\x8A\x97 y)");
        }
      }
    }
  }
  for (Point a = 0; a < l.size(); ++a) {
    if (m.act(q.bottom(), a) != l.bottom()) {
      add("join_left", {q.name(q.bottom()), l.name(a)}, "0 \xE2\x8A\x97 x is not bottom");
    }
    for (Elem r = 0; r < q.size(); ++r) {
      for (Elem s = r + 1; s < q.size(); ++s) {
        if (m.act(q.join(r, s), a) != l.join(m.act(r, a), m.act(s, a))) {
          add("join_left", {q.name(r), q.name(s), l.name(a)},
              "(r v s) \xE2\x8A\x97 x" + std::string(kNe) + "(r \xE2\x8A\x97 x) v (s \xE2\x8A\x97 x)");
        }
      }
    }
  }
  return report;
}

QModule make_module(QuantalePtr q, FiniteLattice lattice, Matrix<Point> action) {
  QModule m{std::move(q), std::move(lattice), std::move(action)};
  ValidationReport r = validate_module(m);
  if (!r.structural.empty()) throw StructuralError(r.summary());
  if (!r.ok()) throw InvalidInstance(r.summary());
  return m;
}

QModule self_module(QuantalePtr q) {
  const std::size_t n = q->size();
  Matrix<Point> action(n, n);
  for (Elem r = 0; r < n; ++r) {
    for (Elem a = 0; a < n; ++a) action(r, a) = q->mul(r, a);
  }
  FiniteLattice lat = q->lattice();
  return make_module(std::move(q), std::move(lat), std::move(action));
}

QModule power_module(QuantalePtr q, std::size_t n, const Limits& limits) {
  const auto funs = all_maps(*q, n, limits);
  const std::size_t m = funs.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& f : funs) names.push_back(render(*q, f));
  Matrix<bool> leq(m, m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool le = true;
      for (std::size_t t = 0; t < n && le; ++t) le = q->leq(funs[i][t], funs[j][t]);
      leq(i, j) = le;
    }
  }
  auto index_of = [&](const QFun& f) {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < n; ++t) idx = idx * q->size() + f[t];
    return static_cast<Point>(idx);
  };
  Matrix<Point> action(q->size(), m);
  for (Elem r = 0; r < q->size(); ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      QFun g = funs[i];
      for (std::size_t t = 0; t < n; ++t) g[t] = q->mul(r, g[t]);
      action(r, i) = index_of(g);
    }
  }
  FiniteLattice lat(std::move(names), leq);
  return make_module(std::move(q), std::move(lat), std::move(action));
}

QOrderedSet module_to_qlattice(const QModule& m) {
  const auto& q = *m.quantale;
  const auto& l = m.lattice;
  Matrix<Elem> order(l.size(), l.size(), q.bottom());
  for (Point a = 0; a < l.size(); ++a) {
    for (Point b = 0; b < l.size(); ++b) {
      Elem v = q.bottom();
      for (Elem r = 0; r < q.size(); ++r) {
        if (l.leq(m.act(r, a), b)) v = q.join(v, r);
      }
      order(a, b) = v;
    }
  }
  return QOrderedSet(m.quantale, l.names(), std::move(order));
}

QModule qlattice_to_module(const QOrderedSet& x) {
  if (!is_separated(x)) throw PreconditionError("qlattice_to_module: Q-ordered set is not separated");
  if (!is_tensored_and_conically_cocomplete(x)) {
    throw PreconditionError("qlattice_to_module: Q-ordered set is not cocomplete");
  }
  const auto& q = x.quantale();
  Matrix<Point> action(q.size(), x.size());
  for (Elem r = 0; r < q.size(); ++r) {
    for (Point a = 0; a < x.size(); ++a) action(r, a) = *tensor(x, r, a);
  }
  FiniteLattice lat(x.carrier(), underlying_order(x));
  return make_module(x.quantale_ptr(), std::move(lat), std::move(action));
}

// -- Enumeration of small Q-orders ----------------------------------------------------------

std::vector<QOrderedSet> enumerate_qorders(QuantalePtr q, std::size_t n, const Limits& limits) {
  std::vector<Elem> diag_values;
  for (Elem e = 0; e < q->size(); ++e) {
    if (q->leq(q->unit(), e)) diag_values.push_back(e);
  }
  const std::uint64_t count = saturating_pow(q->size(), n * n - n) == UINT64_MAX
                                  ? UINT64_MAX
                                  : saturating_pow(q->size(), n * n - n) *
                                        saturating_pow(diag_values.size(), n);
  if (count > limits.enumeration_cap) {
    throw CapExceeded("Q-order enumeration: " + std::to_string(count) +
                      " matrices exceed the enumeration cap of " +
                      std::to_string(limits.enumeration_cap));
  }
  // Odometer over cells; diagonal cells range over diag_values by index.
  std::vector<std::size_t> digit(n * n, 0);
  std::vector<std::size_t> radix(n * n, q->size());
  for (std::size_t i = 0; i < n; ++i) radix[i * n + i] = diag_values.size();
  std::vector<QOrderedSet> out;
  const auto names = point_names(n);
  Matrix<Elem> m(n, n);
  for (std::uint64_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t d = digit[i * n + j];
        m(i, j) = i == j ? diag_values[d] : static_cast<Elem>(d);
      }
    }
    if (transitive_closed(*q, m, n)) out.emplace_back(q, names, m);
    for (std::size_t pos = n * n; pos-- > 0;) {
      if (++digit[pos] < radix[pos]) break;
      digit[pos] = 0;
    }
  }
  return out;
}

QOrderedSet random_qorder(QuantalePtr q, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(q->size()) - 1);
  Matrix<Elem> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(pick(rng));
    m(i, i) = q->join(m(i, i), q->unit());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const Elem v = q->join(m(x, z), q->mul(m(y, z), m(x, y)));
          if (v != m(x, z)) {
            m(x, z) = v;
            changed = true;
          }
        }
      }
    }
  }
  return QOrderedSet(std::move(q), point_names(n), std::move(m));
}

}  // namespace quantopia
