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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace oracle {
namespace {

constexpr double kEps = 1e-9;

/// Least upper bound of a subset (given as a bit mask) under a raw order.
template <class Leq>
std::optional<std::size_t> lub(std::size_t n, std::uint64_t mask, Leq leq) {
  for (std::size_t u = 0; u < n; ++u) {
    bool upper = true;
    for (std::size_t s = 0; s < n && upper; ++s) {
      if (mask >> s & 1u) upper = leq(s, u);
    }
    if (!upper) continue;
    bool least = true;
    for (std::size_t z = 0; z < n && least; ++z) {
      bool zu = true;
      for (std::size_t s = 0; s < n && zu; ++s) {
        if (mask >> s & 1u) zu = leq(s, z);
      }
      if (zu) least = leq(u, z);
    }
    if (least) return u;
  }
  return std::nullopt;
}

Elem join2(const FiniteQuantale& q, Elem a, Elem b) { return join(q, {a, b}); }
Elem meet2(const FiniteQuantale& q, Elem a, Elem b) { return meet(q, {a, b}); }

Elem pitch(const FiniteQuantale& q, const QFun& phi, const QFun& psi) {
  std::vector<Elem> terms;
  for (std::size_t i = 0; i < phi.size(); ++i) terms.push_back(q.mul(phi[i], psi[i]));
  return join(q, terms);
}

}  // namespace

bool quantale_valid(const QuantaleTable& t) {
  const std::size_t n = t.elements.size();
  if (n == 0 || n > 16 || t.leq.rows() != n || t.mul.rows() != n) return false;
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (!idx.emplace(t.elements[i], i).second) return false;
  }
  std::vector<std::size_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = idx.find(t.mul(a, b));
      if (it == idx.end()) return false;
      mul[a * n + b] = it->second;
    }
  }
  auto unit = idx.find(t.unit);
  if (unit == idx.end()) return false;
  auto leq = [&](std::size_t a, std::size_t b) { return static_cast<bool>(t.leq(a, b)); };
  auto m = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
      }
    }
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::size_t> joins(subsets);
  for (std::uint64_t s = 0; s < subsets; ++s) {
    auto j = lub(n, s, leq);
    if (!j) return false;
    joins[s] = *j;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (m(unit->second, a) != a || m(a, unit->second) != a) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (m(a, b) != m(b, a)) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) return false;
      }
    }
    for (std::uint64_t s = 0; s < subsets; ++s) {
      std::uint64_t image = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (s >> x & 1u) image |= std::uint64_t{1} << m(a, x);
      }
      if (m(a, joins[s]) != joins[image]) return false;
    }
  }
  return true;
}

Elem join(const FiniteQuantale& q, const std::vector<Elem>& xs) {
  std::uint64_t mask = 0;
  for (Elem x : xs) mask |= std::uint64_t{1} << x;
  return static_cast<Elem>(*lub(q.size(), mask, [&](std::size_t a, std::size_t b) {
    return q.leq(static_cast<Elem>(a), static_cast<Elem>(b));
  }));
}

Elem meet(const FiniteQuantale& q, const std::vector<Elem>& xs) {
  std::uint64_t mask = 0;
  for (Elem x : xs) mask |= std::uint64_t{1} << x;
  return static_cast<Elem>(*lub(q.size(), mask, [&](std::size_t a, std::size_t b) {
    return q.leq(static_cast<Elem>(b), static_cast<Elem>(a));
  }));
}

Elem implication(const FiniteQuantale& q, Elem p, Elem r) {
  std::vector<Elem> ok;
  for (Elem x = 0; x < q.size(); ++x) {
    if (q.leq(q.mul(p, x), r)) ok.push_back(x);
  }
  return join(q, ok);
}

bool is_weight(const QOrderedSet& x, const QFun& phi) {
  const auto& q = x.quantale();
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) {
      if (!q.leq(q.mul(phi[b], x(a, b)), phi[a])) return false;
    }
  }
  return true;
}

bool is_coweight(const QOrderedSet& x, const QFun& psi) {
  const auto& q = x.quantale();
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < x.size(); ++b) {
      if (!q.leq(q.mul(psi[a], x(a, b)), psi[b])) return false;
    }
  }
  return true;
}

std::vector<QFun> all_functions(const FiniteQuantale& q, std::size_t n) {
  std::vector<QFun> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    QFun f{std::vector<Elem>(n)};
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      f[i] = static_cast<Elem>(c % q.size());
      c /= q.size();
    }
    out.push_back(std::move(f));
  }
  return out;
}

Elem sub(const FiniteQuantale& q, const QFun& f, const QFun& g) {
  std::vector<Elem> terms;
  for (std::size_t i = 0; i < f.size(); ++i) terms.push_back(oracle::implication(q, f[i], g[i]));
  return meet(q, terms);
}

std::optional<Point> sup(const QOrderedSet& x, const QFun& phi) {
  const auto& q = x.quantale();
  for (Point a = 0; a < x.size(); ++a) {
    bool ok = true;
    for (Point y = 0; y < x.size() && ok; ++y) {
      std::vector<Elem> terms;
      for (Point t = 0; t < x.size(); ++t) terms.push_back(oracle::implication(q, phi[t], x(t, y)));
      ok = x(a, y) == meet(q, terms);
    }
    if (ok) return a;
  }
  return std::nullopt;
}

std::vector<QFun> flat_ideals(const QOrderedSet& x) {
  const auto& q = x.quantale();
  const auto maps = all_functions(q, x.size());
  std::vector<QFun> cow;
  for (const auto& f : maps) {
    if (oracle::is_coweight(x, f)) cow.push_back(f);
  }
  std::map<QFun, std::size_t> index;
  for (std::size_t i = 0; i < cow.size(); ++i) index.emplace(cow[i], i);
  std::vector<std::size_t> meet_of(cow.size() * cow.size());
  for (std::size_t i = 0; i < cow.size(); ++i) {
    for (std::size_t j = 0; j < cow.size(); ++j) {
      QFun m{std::vector<Elem>(x.size())};
      for (std::size_t t = 0; t < x.size(); ++t) m[t] = meet2(q, cow[i][t], cow[j][t]);
      meet_of[i * cow.size() + j] = index.at(m);
    }
  }
  std::vector<QFun> out;
  for (const auto& phi : maps) {
    if (!oracle::is_weight(x, phi)) continue;
    if (!q.leq(q.unit(), join(q, phi.values))) continue;
    std::vector<Elem> p(cow.size());
    for (std::size_t i = 0; i < cow.size(); ++i) p[i] = pitch(q, phi, cow[i]);
    bool flat = true;
    for (std::size_t i = 0; i < cow.size() && flat; ++i) {
      for (std::size_t j = 0; j < cow.size() && flat; ++j) {
        flat = p[meet_of[i * cow.size() + j]] == meet2(q, p[i], p[j]);
      }
    }
    if (flat) out.push_back(phi);
  }
  return out;
}

std::vector<QFun> scott_opens(const QOrderedSet& x, const std::vector<QFun>& flats) {
  const auto& q = x.quantale();
  std::vector<std::pair<QFun, Point>> with_sup;
  for (const auto& phi : flats) {
    if (auto s = sup(x, phi)) with_sup.emplace_back(phi, *s);
  }
  std::vector<QFun> out;
  for (const auto& psi : all_functions(q, x.size())) {
    if (!oracle::is_coweight(x, psi)) continue;
    bool open = true;
    for (const auto& [phi, s] : with_sup) {
      if (!q.leq(psi[s], pitch(q, phi, psi))) {
        open = false;
        break;
      }
    }
    if (open) out.push_back(psi);
  }
  return out;
}

bool is_f_domain(const QOrderedSet& x) {
  const auto& q = x.quantale();
  const std::size_t n = x.size();
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      if (a != b && q.leq(q.unit(), x(a, b)) && q.leq(q.unit(), x(b, a))) return false;
    }
  }
  const auto flats = flat_ideals(x);
  std::vector<Point> sups;
  for (const auto& phi : flats) {
    auto s = sup(x, phi);
    if (!s) return false;
    sups.push_back(*s);
  }
  for (Point b = 0; b < n; ++b) {
    QFun lower{std::vector<Elem>(n)};
    for (Point a = 0; a < n; ++a) {
      std::vector<Elem> terms;
      for (std::size_t i = 0; i < flats.size(); ++i) {
        terms.push_back(oracle::implication(q, x(b, sups[i]), flats[i][a]));
      }
      lower[a] = meet(q, terms);
    }
    if (std::find(flats.begin(), flats.end(), lower) == flats.end()) return false;
    auto s = sup(x, lower);
    if (!s || *s != b) return false;
  }
  return true;
}

bool is_adjoint(const QOrderedSet& x, const QOrderedSet& y, const std::vector<Point>& f,
                const std::vector<Point>& g) {
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < y.size(); ++b) {
      if (y(f[a], b) != x(a, g[b])) return false;
    }
  }
  return true;
}

std::optional<std::vector<QFun>> points(const QModule& m, std::uint64_t bound) {
  const auto& q = *m.quantale;
  const auto& l = m.lattice;
  const std::size_t n = m.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q.size();
    if (total > bound) return std::nullopt;
  }
  auto lleq = [&](std::size_t a, std::size_t b) {
    return l.leq(static_cast<Point>(a), static_cast<Point>(b));
  };
  std::vector<std::size_t> ljoin(n * n);
  std::vector<std::size_t> lmeet(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      ljoin[a * n + b] = *lub(n, mask, lleq);
      lmeet[a * n + b] = *lub(n, mask, [&](std::size_t u, std::size_t v) { return lleq(v, u); });
    }
  }
  const std::size_t top = *lub(n, (std::uint64_t{1} << n) - 1, lleq);
  const std::size_t bottom = *lub(n, 0, lleq);
  std::vector<QFun> out;
  for (const auto& p : all_functions(q, n)) {
    if (p[top] != q.top() || p[bottom] != q.bottom()) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        ok = p[ljoin[a * n + b]] == join2(q, p[a], p[b]) &&
             p[lmeet[a * n + b]] == meet2(q, p[a], p[b]);
      }
      for (Elem r = 0; r < q.size() && ok; ++r) ok = p[m.act(r, static_cast<Point>(a))] == q.mul(r, p[a]);
    }
    if (ok) out.push_back(p);
  }
  return out;
}

bool meet_is_homomorphism(const FiniteQuantale& q, Elem r) {
  for (Elem s = 0; s < q.size(); ++s) {
    for (Elem x = 0; x < q.size(); ++x) {
      if (meet2(q, r, q.mul(s, x)) != q.mul(s, meet2(q, r, x))) return false;
      if (meet2(q, r, join2(q, s, x)) != join2(q, meet2(q, r, s), meet2(q, r, x))) return false;
    }
  }
  return true;
}

double grid_residuum(const TNorm& t, double x, double y, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = static_cast<double>(i) / static_cast<double>(n - 1);
    if (t.eval(x, v) <= y + 1e-12) best = v;
  }
  return best;
}

std::vector<double> d_envelope(const TNorm& t, double x, std::size_t n) {
  auto at = [&](std::size_t i) { return static_cast<double>(i) / static_cast<double>(n - 1); };
  std::set<double> idem = {0.0, 1.0};
  for (const auto& p : t.pieces()) {
    idem.insert(p.lo);
    idem.insert(p.hi);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.is_idempotent(at(i))) idem.insert(at(i));
  }
  std::vector<double> env(n, 2.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = at(j);
    if (a < x - kEps) continue;
    for (double u : idem) {
      if (u < a - kEps) continue;
      auto phi = [&](double s) { return s == 0.0 ? 1.0 : std::min(u, t.implication(s, a)); };
      // The weight inequality is sampled on every fifth grid point.
      bool weight = true;
      for (std::size_t p = 0; p < n && weight; p += 5) {
        for (std::size_t r = 0; r < n && weight; r += 5) {
          weight = t.eval(phi(at(r)), t.implication(at(p), at(r))) <= phi(at(p)) + kEps;
        }
      }
      if (!weight) continue;
      for (std::size_t i = 0; i < n; ++i) env[i] = std::min(env[i], phi(at(i)));
    }
  }
  return env;
}

}  // namespace oracle
