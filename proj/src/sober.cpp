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

#include "quantopia/sober.hpp"

#include <algorithm>
#include <set>

namespace quantopia {

QModule open_set_module(const QTopSpace& t) {
  const auto& q = *t.quantale;
  const std::size_t m = t.opens.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& f : t.opens) names.push_back(render(q, f));
  Matrix<bool> leq(m, m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool le = true;
      for (std::size_t x = 0; x < t.size() && le; ++x) le = q.leq(t.opens[i][x], t.opens[j][x]);
      leq(i, j) = le;
    }
  }
  Matrix<Point> action(q.size(), m);
  for (Elem r = 0; r < q.size(); ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      QFun g = t.opens[i];
      for (auto& v : g.values) v = q.mul(v, r);
      auto idx = t.index_of(g);
      if (!idx) throw InvalidInstance("open_set_module: lambda & r is not open");
      action(r, i) = static_cast<Point>(*idx);
    }
  }
  FiniteLattice lat(std::move(names), leq);
  return make_module(t.quantale, std::move(lat), std::move(action));
}

std::optional<std::string> point_failure(const QModule& m, const ModulePoint& p) {
  const auto& q = *m.quantale;
  const auto& l = m.lattice;
  if (p.size() != l.size()) return std::string("size");
  if (p[l.top()] != q.top()) return std::string("pt1");
  for (Point a = 0; a < l.size(); ++a) {
    for (Point b = a + 1; b < l.size(); ++b) {
      if (p[l.meet(a, b)] != q.meet(p[a], p[b])) return std::string("pt2");
    }
  }
  if (p[l.bottom()] != q.bottom()) return std::string("pt3");
  for (Point a = 0; a < l.size(); ++a) {
    for (Point b = a + 1; b < l.size(); ++b) {
      if (p[l.join(a, b)] != q.join(p[a], p[b])) return std::string("pt3");
    }
  }
  for (Elem r = 0; r < q.size(); ++r) {
    for (Point a = 0; a < l.size(); ++a) {
      if (p[m.act(r, a)] != q.mul(r, p[a])) return std::string("pt4");
    }
  }
  return std::nullopt;
}

bool is_point(const QModule& m, const ModulePoint& p) { return !point_failure(m, p); }

namespace {

struct Constraint {
  enum Kind { top, join, meet, action, fixed } kind;
  Point a;
  Point b;
  Elem r;
};

class PointSearch {
 public:
  PointSearch(const QModule& m, const PointSearchOptions& options, const Limits& limits)
      : m_(m), q_(*m.quantale), l_(m.lattice), limits_(limits) {
    const auto& irr = l_.join_irreducibles();
    const std::size_t n = l_.size();
    below_.resize(n);
    level_.assign(n, -1);
    for (std::size_t pos = 0; pos < irr.size(); ++pos) {
      for (Point e = 0; e < n; ++e) {
        if (l_.leq(irr[pos], e)) {
          below_[e].push_back(irr[pos]);
          level_[e] = static_cast<int>(pos);
        }
      }
    }
    by_level_.resize(irr.size() + 1);
    elements_at_.resize(irr.size() + 1);
    for (Point e = 0; e < n; ++e) elements_at_[level_[e] + 1].push_back(e);
    auto add = [&](Constraint c, int lvl) { by_level_[lvl + 1].push_back(c); };
    add({Constraint::top, l_.top(), 0, 0}, level_[l_.top()]);
    for (Point a = 0; a < n; ++a) {
      for (Point b = a + 1; b < n; ++b) {
        const Point j = l_.join(a, b);
        const Point mt = l_.meet(a, b);
        add({Constraint::join, a, b, 0}, std::max({level_[a], level_[b], level_[j]}));
        add({Constraint::meet, a, b, 0}, std::max({level_[a], level_[b], level_[mt]}));
      }
    }
    if (options.preserve_action) {
      for (Elem r = 0; r < q_.size(); ++r) {
        for (Point a = 0; a < n; ++a) {
          add({Constraint::action, a, 0, r}, std::max(level_[a], level_[m_.act(r, a)]));
        }
      }
    }
    for (const auto& [e, v] : options.fixed) {
      if (e >= n || v >= q_.size()) throw PreconditionError("search_points: fixed value out of range");
      add({Constraint::fixed, e, 0, v}, level_[e]);
    }
    value_.assign(n, q_.bottom());
  }

  PointSearchResult run() {
    if (!level_ok(0)) return std::move(result_);
    descend(0);
    std::vector<ModulePoint> verified;
    for (auto& p : result_.points) {
      if (is_point_candidate(p)) verified.push_back(std::move(p));
    }
    std::sort(verified.begin(), verified.end());
    result_.points = std::move(verified);
    return std::move(result_);
  }

 private:
  bool check(const Constraint& c, const std::vector<Elem>& v) const {
    switch (c.kind) {
      case Constraint::top:
        return v[c.a] == q_.top();
      case Constraint::join:
        return v[l_.join(c.a, c.b)] == q_.join(v[c.a], v[c.b]);
      case Constraint::meet:
        return v[l_.meet(c.a, c.b)] == q_.meet(v[c.a], v[c.b]);
      case Constraint::action:
        return v[m_.act(c.r, c.a)] == q_.mul(c.r, v[c.a]);
      case Constraint::fixed:
        return v[c.a] == c.r;
    }
    return false;
  }

  bool level_ok(std::size_t slot, const std::vector<Elem>& v) const {
    for (const auto& c : by_level_[slot]) {
      if (!check(c, v)) return false;
    }
    return true;
  }
  bool level_ok(std::size_t slot) const { return level_ok(slot, value_); }

  void descend(std::size_t pos) {
    const auto& irr = l_.join_irreducibles();
    if (pos == irr.size()) {
      result_.points.emplace_back(value_);
      return;
    }
    for (Elem v = 0; v < q_.size(); ++v) {
      if (++result_.nodes > limits_.point_search_cap) {
        throw CapExceeded("point search exceeds the cap of " +
                          std::to_string(limits_.point_search_cap) + " nodes");
      }
      value_[irr[pos]] = v;
      for (Point e : elements_at_[pos + 1]) {
        Elem acc = q_.bottom();
        for (Point j : below_[e]) acc = q_.join(acc, value_[j]);
        value_[e] = acc;
      }
      // A value not above the lower join-irreducibles repeats another branch.
      if (value_[irr[pos]] != v) continue;
      if (level_ok(pos + 1)) descend(pos + 1);
    }
  }

  bool is_point_candidate(const ModulePoint& p) const {
    for (std::size_t s = 0; s < by_level_.size(); ++s) {
      if (!level_ok(s, p.values)) return false;
    }
    return true;
  }

  const QModule& m_;
  const FiniteQuantale& q_;
  const FiniteLattice& l_;
  Limits limits_;
  std::vector<std::vector<Point>> below_;
  std::vector<int> level_;
  std::vector<std::vector<Constraint>> by_level_;
  std::vector<std::vector<Point>> elements_at_;
  std::vector<Elem> value_;
  PointSearchResult result_;
};

}  // namespace

PointSearchResult search_points(const QModule& m, const PointSearchOptions& options,
                                const Limits& limits) {
  return PointSearch(m, options, limits).run();
}

std::vector<ModulePoint> points(const QModule& m, const Limits& limits) {
  auto found = search_points(m, {}, limits).points;
  for (const auto& p : found) {
    if (!is_point(m, p)) throw Error("point search produced a map that is not a point");
  }
  return found;
}

std::string to_string(SobrietyVerdict v) {
  switch (v) {
    case SobrietyVerdict::sober:
      return "sober";
    case SobrietyVerdict::not_t0:
      return "not_T0";
    case SobrietyVerdict::missing_point:
      return "missing_point";
  }
  return "unknown";
}

SobrietyCertificate eta(const QTopSpace& t, const Limits& limits) {
  SobrietyCertificate cert;
  for (Point x = 0; x < t.size(); ++x) {
    ModulePoint p(std::vector<Elem>(t.opens.size()));
    for (std::size_t i = 0; i < t.opens.size(); ++i) p[i] = t.opens[i][x];
    cert.eta.push_back(std::move(p));
  }
  cert.module_points = points(open_set_module(t), limits);
  for (Point x = 0; x < t.size() && !cert.pair; ++x) {
    for (Point y = x + 1; y < t.size(); ++y) {
      if (cert.eta[x] == cert.eta[y]) {
        cert.pair = std::make_pair(x, y);
        break;
      }
    }
  }
  const std::set<ModulePoint> image(cert.eta.begin(), cert.eta.end());
  for (const auto& p : cert.module_points) {
    if (!image.count(p)) {
      cert.missing = p;
      break;
    }
  }
  if (cert.pair) {
    cert.verdict = SobrietyVerdict::not_t0;
  } else if (cert.missing) {
    cert.verdict = SobrietyVerdict::missing_point;
  }
  return cert;
}

bool is_sober(const QTopSpace& t, const Limits& limits) {
  return eta(t, limits).verdict == SobrietyVerdict::sober;
}

Sobrification sobrify(const QTopSpace& t, const Limits& limits) {
  Sobrification out;
  out.points = points(open_set_module(t), limits);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < out.points.size(); ++k) names.push_back("p" + std::to_string(k));
  std::vector<QFun> opens;
  for (std::size_t i = 0; i < t.opens.size(); ++i) {
    QFun hat(std::vector<Elem>(out.points.size()));
    for (std::size_t k = 0; k < out.points.size(); ++k) hat[k] = out.points[k][i];
    opens.push_back(std::move(hat));
  }
  out.space = make_space(t.quantale, std::move(names), std::move(opens));
  for (Point x = 0; x < t.size(); ++x) {
    ModulePoint ex(std::vector<Elem>(t.opens.size()));
    for (std::size_t i = 0; i < t.opens.size(); ++i) ex[i] = t.opens[i][x];
    auto it = std::lower_bound(out.points.begin(), out.points.end(), ex);
    if (it == out.points.end() || *it != ex) throw Error("eta(x) is not a point of O(X)");
    out.eta.push_back(static_cast<Point>(it - out.points.begin()));
  }
  return out;
}

bool is_homeomorphism(const QTopSpace& from, const QTopSpace& to, const PointMap& f) {
  if (f.size() != from.size() || from.size() != to.size()) return false;
  std::vector<bool> hit(to.size(), false);
  for (Point p : f) {
    if (p >= to.size() || hit[p]) return false;
    hit[p] = true;
  }
  // For a bijection, pulling back is injective on opens, so equal counts make it onto.
  return is_continuous(from, to, f) && from.opens.size() == to.opens.size();
}

SpatialityReport spatiality(const QModule& m, const Limits& limits) {
  SpatialityReport rep;
  const auto& q = *m.quantale;
  const auto& l = m.lattice;
  const auto pts = points(m, limits);
  rep.point_count = pts.size();
  std::vector<QFun> hat(l.size(), QFun(std::vector<Elem>(pts.size())));
  for (Point a = 0; a < l.size(); ++a) {
    for (std::size_t k = 0; k < pts.size(); ++k) hat[a][k] = pts[k][a];
  }
  std::set<QFun> seen;
  for (const auto& h : hat) {
    if (!seen.insert(h).second) {
      rep.reason = "the counit is not injective";
      return rep;
    }
  }
  for (Point a = 0; a < l.size(); ++a) {
    for (Point b = 0; b < l.size(); ++b) {
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (hat[l.join(a, b)][k] != q.join(hat[a][k], hat[b][k])) {
          rep.reason = "the counit does not preserve joins";
          return rep;
        }
        if (hat[l.meet(a, b)][k] != q.meet(hat[a][k], hat[b][k])) {
          rep.reason = "the counit does not preserve meets";
          return rep;
        }
      }
    }
    for (Elem r = 0; r < q.size(); ++r) {
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (hat[m.act(r, a)][k] != q.mul(r, hat[a][k])) {
          rep.reason = "the counit does not preserve the action";
          return rep;
        }
      }
    }
  }
  rep.spatial = true;
  return rep;
}

bool is_spatial(const QModule& m, const Limits& limits) { return spatiality(m, limits).spatial; }

QModule diamond_module() {
  auto q = boolean_quantale();
  std::vector<std::string> names = {"bot", "a", "b", "c", "top"};
  Matrix<bool> leq(5, 5, false);
  for (std::size_t i = 0; i < 5; ++i) {
    leq(i, i) = true;
    leq(0, i) = true;
    leq(i, 4) = true;
  }
  FiniteLattice lat(names, leq);
  Matrix<Point> action(q->size(), 5);
  const Elem one = q->at("1");
  for (Elem r = 0; r < q->size(); ++r) {
    for (Point a = 0; a < 5; ++a) action(r, a) = r == one ? a : lat.bottom();
  }
  return make_module(std::move(q), std::move(lat), std::move(action));
}

std::optional<MeetHomFailure> meet_homomorphism_failure(const FiniteQuantale& q, Elem r) {
  auto action_fails = [&](Elem s, Elem x) {
    return q.meet(r, q.mul(s, x)) != q.mul(s, q.meet(r, x));
  };
  if (action_fails(r, q.top())) return MeetHomFailure{"action", r, r, q.top()};
  for (Elem s = 0; s < q.size(); ++s) {
    for (Elem x = 0; x < q.size(); ++x) {
      if (action_fails(s, x)) return MeetHomFailure{"action", r, s, x};
      if (q.meet(r, q.join(s, x)) != q.join(q.meet(r, s), q.meet(r, x))) {
        return MeetHomFailure{"join", r, s, x};
      }
    }
  }
  return std::nullopt;
}

bool eta_natural(const QTopSpace& from, const QTopSpace& to, const PointMap& f) {
  if (!is_continuous(from, to, f)) throw PreconditionError("eta_natural: map is not continuous");
  QFun pulled(std::vector<Elem>(from.size()));
  for (const auto& lambda : to.opens) {
    for (std::size_t i = 0; i < f.size(); ++i) pulled[i] = lambda[f[i]];
    const std::size_t idx = *from.index_of(pulled);
    for (Point x = 0; x < from.size(); ++x) {
      // eta_X(x) evaluated at lambda o f, against eta_Y(f(x)) evaluated at lambda.
      if (from.opens[idx][x] != lambda[f[x]]) return false;
    }
  }
  return true;
}

}  // namespace quantopia
