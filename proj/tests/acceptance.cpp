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

// Acceptance runner: for each criterion, runs the named library suite and an
// independent comparison against the brute-force oracle, then prints a single
// PASS/FAIL line. Optional arguments select criteria by number.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "quantopia/interval_lab.hpp"
#include "quantopia/sober.hpp"
#include "quantopia/suites.hpp"

using namespace quantopia;

namespace {

constexpr std::uint64_t kPointBound = 2'000'000;

/// Collects oracle disagreements for one criterion.
struct Findings {
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 20) problems.push_back(what);
    if (!ok && problems.size() == 20) problems.push_back("(further problems suppressed)");
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::set<QFun> as_set(const std::vector<QFun>& v) { return {v.begin(), v.end()}; }

QuantaleTable table_of(const QuantalePtr& q) { return q->table(); }

// -- Criterion 1 ------------------------------------------------------------------------

void oracle_axioms(Findings& f) {
  std::size_t tables = 0;
  for (const auto& q : chain_fixtures(6)) {
    const QuantaleTable t = table_of(q);
    f.expect(oracle::quantale_valid(t), q->label() + " rejected by the oracle");
    const std::size_t n = t.elements.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::optional<std::string>> edits;
        for (const auto& v : t.elements) {
          if (v != t.mul(a, b)) edits.emplace_back(v);
        }
        if (a != b) edits.emplace_back(std::nullopt);
        for (const auto& e : edits) {
          const QuantaleTable m = mutate_table(t, a, b, e);
          ++tables;
          f.expect(oracle::quantale_valid(m) == validate_quantale(m).ok(),
                   q->label() + " mutant (" + t.elements[a] + "," + t.elements[b] + ")" +
                       (e ? " -> " + *e : " order flip"));
        }
      }
    }
  }
  f.note(std::to_string(tables) + " mutant tables compared");
}

// -- Criterion 2 ------------------------------------------------------------------------

void oracle_yoneda_adjoint(Findings& f) {
  const SuiteOptions opt;
  std::size_t orders = 0;
  std::size_t pairs = 0;
  for (const auto& q : {boolean_quantale(), godel_chain(3), mv_chain(3)}) {
    for (Elem p = 0; p < q->size(); ++p) {
      for (Elem r = 0; r < q->size(); ++r) {
        f.expect(oracle::implication(*q, p, r) == q->impl(p, r), q->label() + " residual");
        f.expect(oracle::join(*q, {p, r}) == q->join(p, r), q->label() + " join");
        f.expect(oracle::meet(*q, {p, r}) == q->meet(p, r), q->label() + " meet");
      }
    }
    auto xs = small_qorders(q, 3, opt.limits);
    for (auto& x : random_qorders(q, opt.random_instances, 4, opt.seed)) xs.push_back(std::move(x));
    for (const auto& x : xs) {
      ++orders;
      std::vector<QFun> ws;
      for (const auto& phi : oracle::all_functions(*q, x.size())) {
        if (oracle::is_weight(x, phi)) ws.push_back(phi);
      }
      f.expect(as_set(ws) == as_set(weights(x)), q->label() + " weights differ");
      for (Point a = 0; a < x.size(); ++a) {
        const QFun y = yoneda(x, a);
        for (const auto& phi : ws) {
          f.expect(oracle::sub(*q, y, phi) == phi[a], q->label() + " Yoneda equality");
        }
      }
      if (x.size() > 3) continue;
      const auto maps = all_point_maps(x.size(), x.size());
      for (const auto& fm : maps) {
        for (const auto& gm : maps) {
          ++pairs;
          f.expect(oracle::is_adjoint(x, x, fm, gm) == is_adjoint(x, x, fm, gm).holds,
                   q->label() + " adjoint verdict");
        }
      }
    }
  }
  f.note(std::to_string(orders) + " Q-orders, " + std::to_string(pairs) + " map pairs");
}

// -- Criterion 3 ------------------------------------------------------------------------

void oracle_flat(Findings& f) {
  std::size_t orders = 0;
  std::size_t pushes = 0;
  for (const auto& q : {boolean_quantale(), godel_chain(3), mv_chain(3)}) {
    const auto xs = small_qorders(q, 3);
    std::vector<std::set<QFun>> flats;
    for (const auto& x : xs) {
      flats.push_back(as_set(oracle::flat_ideals(x)));
      f.expect(flats.back() == as_set(flat_ideals(x).ideals), q->label() + " flat ideals differ");
      ++orders;
    }
    if (q->label() == godel_chain(3)->label()) continue;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const auto& x = xs[i];
        const auto& y = xs[j];
        if (x.size() + y.size() > 5) continue;
        for (const auto& m : all_point_maps(x.size(), y.size())) {
          if (!preserves_order(x, y, m)) continue;
          for (const auto& phi : flats[i]) {
            ++pushes;
            f.expect(flats[j].count(pushforward(x, y, m, phi)) == 1,
                     q->label() + " pushforward left the flat ideals");
          }
        }
      }
    }
  }
  f.note(std::to_string(orders) + " Q-orders, " + std::to_string(pushes) + " pushforwards");
}

// -- Criterion 4 ------------------------------------------------------------------------

/// Oracle sobriety: every brute-force point of the open-set module is the
/// image of exactly one carrier point. Empty when the module is too large.
std::optional<bool> oracle_sober(const QTopSpace& t) {
  auto pts = oracle::points(open_set_module(t), kPointBound);
  if (!pts) return std::nullopt;
  std::vector<QFun> images;
  for (Point x = 0; x < t.size(); ++x) {
    QFun e{std::vector<Elem>(t.opens.size())};
    for (std::size_t i = 0; i < t.opens.size(); ++i) e[i] = t.opens[i][x];
    images.push_back(e);
  }
  if (as_set(images).size() != images.size()) return false;
  return as_set(*pts) == as_set(images);
}

void oracle_scott(Findings& f) {
  std::size_t sober_checked = 0;
  for (const auto& [label, x] : scott_pipeline_instances()) {
    f.expect(oracle::is_f_domain(x), label + " is not an F-domain by the oracle");
    const auto flats = oracle::flat_ideals(x);
    const auto space = scott_topology(x).space;
    f.expect(as_set(oracle::scott_opens(x, flats)) == as_set(space.opens),
             label + " Scott opens differ");
    if (auto s = oracle_sober(space)) {
      ++sober_checked;
      f.expect(*s, label + " Scott space not sober by the oracle");
    }
  }
  f.note(std::to_string(sober_checked) + " sobriety verdicts re-derived by brute force");
}

// -- Criterion 5 ------------------------------------------------------------------------

void oracle_sobriety(Findings& f) {
  std::size_t brute = 0;
  std::size_t skipped = 0;
  for (const auto& [label, t] : sobriety_fixture_spaces(SuiteOptions{}.seed)) {
    const QModule m = open_set_module(t);
    auto pts = oracle::points(m, kPointBound);
    if (!pts) {
      ++skipped;
      continue;
    }
    ++brute;
    f.expect(as_set(*pts) == as_set(points(m)), label + " module points differ");
    const bool sober = is_sober(t);
    f.expect(oracle_sober(t) == sober, label + " sobriety verdict differs");
    const auto s = sobrify(t);
    f.expect(s.points.size() == pts->size(), label + " sobrification has the wrong carrier");
    if (auto again = oracle_sober(s.space)) f.expect(*again, label + " sobrification not sober");
    if (sober) {
      const QOrderedSet sp = specialization(t);
      if (saturating_pow(t.quantale->size(), sp.size()) <= kPointBound) {
        for (const auto& phi : oracle::flat_ideals(sp)) {
          f.expect(oracle::sup(sp, phi).has_value(), label + " specialization not F-cocomplete");
        }
      }
    }
  }
  f.note(std::to_string(brute) + " spaces brute-forced, " + std::to_string(skipped) +
         " beyond the enumeration bound");
}

// -- Criterion 6 ------------------------------------------------------------------------

void oracle_frames(Findings& f) {
  for (const auto& q : {boolean_quantale(), godel_chain(3), godel_chain(4), mv_chain(3), mv_chain(4)}) {
    const bool frame = quantale_properties(*q).is_frame;
    for (Elem r = 0; r < q->size(); ++r) {
      const bool hom = oracle::meet_is_homomorphism(*q, r);
      f.expect(hom == !meet_homomorphism_failure(*q, r).has_value(), q->label() + " verdict differs");
      if (frame) f.expect(hom, q->label() + " frame with a failing r");
    }
  }
  const auto l3 = mv_chain(3);
  const Elem half = l3->at("1/2");
  f.expect(!oracle::meet_is_homomorphism(*l3, half), "r = 1/2 on L3 should fail");
  // r meet (r & 1) = r & (r meet 1) would force r = r & r, and 1/2 & 1/2 = 0.
  f.expect(l3->mul(half, half) != half, "1/2 is idempotent in L3");
}

// -- Criterion 7 ------------------------------------------------------------------------

void oracle_interval_finite(Findings& f) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto q = mv_chain(n);
    const QOrderedSet x = alpha_L(q);
    const auto flats = oracle::flat_ideals(x);
    const auto flat_set = as_set(flats);
    for (Elem a = 0; a < q->size(); ++a) {
      const QFun d = d_ideal_finite(*q, a);
      f.expect(flat_set.count(d) == 1, q->label() + " d(" + q->name(a) + ") is not flat");
      auto s = oracle::sup(x, d);
      f.expect(s && q->leq(a, static_cast<Elem>(*s)), q->label() + " sup d(x) below x");
      for (const auto& phi : flats) {
        auto sp = oracle::sup(x, phi);
        if (!sp || !q->leq(a, static_cast<Elem>(*sp))) continue;
        for (Elem t = 0; t < q->size(); ++t) {
          f.expect(q->leq(d[t], phi[t]), q->label() + " d(" + q->name(a) + ") is not minimal");
        }
      }
    }
  }
  std::size_t compared = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& q : {godel_chain(n), mv_chain(n)}) {
      const QOrderedSet x = alpha_L(q);
      const auto opens = as_set(oracle::scott_opens(x, oracle::flat_ideals(x)));
      for (const auto& psi : oracle::all_functions(*q, q->size())) {
        if (!oracle::is_coweight(x, psi)) continue;
        ++compared;
        f.expect(scott_open_alphaL_finite(*q, psi) == (opens.count(psi) == 1),
                 q->label() + " criterion differs on " + render(*q, psi));
      }
      if (q->label() == godel_chain(n)->label()) {
        f.expect(opens == as_set(sierpinski(q).opens), q->label() + " Scott opens differ from O(S)");
      }
    }
  }
  const auto m5 = mv_chain(5);
  const QOrderedSet x5 = alpha_L(m5);
  const auto opens5 = as_set(oracle::scott_opens(x5, oracle::flat_ideals(x5)));
  const auto sier5 = as_set(sierpinski(m5).opens);
  for (Elem c = 1; c + 1u < m5->size(); ++c) {
    const QFun lam = counterexample_open_finite(*m5, c);
    f.expect(opens5.count(lam) == 1, "L5 counterexample at " + m5->name(c) + " is not Scott-open");
    f.expect(sier5.count(lam) == 0, "L5 counterexample at " + m5->name(c) + " is Sierpinski-open");
  }
  f.note(std::to_string(compared) + " coweights compared");
}

// -- Criterion 8 ------------------------------------------------------------------------

void oracle_interval_grid(Findings& f) {
  const GridSpec g;
  const double tol = g.sup_tol();
  const auto fixtures = fixture_tnorms();
  double worst_res = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const TNorm& t = fixtures[k];
    for (std::size_t i = 0; i < g.points; ++i) {
      for (std::size_t j = 0; j < g.points; ++j) {
        const double e = std::abs(oracle::grid_residuum(t, g.at(i), g.at(j), g.points) -
                                  t.implication(g.at(i), g.at(j)));
        worst_res = std::max(worst_res, e);
        f.expect(e <= tol + 1e-12, t.label() + " residual off the grid oracle");
      }
    }
  }
  double worst_d = 0.0;
  for (const auto& t : fixtures) {
    for (std::size_t i = 0; i < g.points; i += 10) {
      const double x = g.at(i);
      const auto env = oracle::d_envelope(t, x, g.points);
      const IntervalWeight d = d_ideal(t, x);
      for (std::size_t s = 0; s < g.points; ++s) {
        const double e = std::abs(env[s] - d(g.at(s)));
        worst_d = std::max(worst_d, e);
        f.expect(e <= tol + 1e-12, t.label() + " d(" + std::to_string(x) + ") off the envelope");
      }
    }
  }
  std::ostringstream os;
  os << "worst residual error " << worst_res << ", worst d error " << worst_d << ", tolerance "
     << tol;
  f.note(os.str());
}

// -- Criterion 9 ------------------------------------------------------------------------

/// Finite domain condition by brute force: d(x), taken as the meet of all flat
/// ideals with supremum above x, is itself flat and d preserves the order.
bool oracle_domain(const QuantalePtr& q) {
  const QOrderedSet x = alpha_L(q);
  const auto flats = oracle::flat_ideals(x);
  const auto flat_set = as_set(flats);
  std::vector<QFun> d;
  for (Elem a = 0; a < q->size(); ++a) {
    QFun m{std::vector<Elem>(q->size(), q->top())};
    for (const auto& phi : flats) {
      auto s = oracle::sup(x, phi);
      if (!s || !q->leq(a, static_cast<Elem>(*s))) continue;
      for (Elem t = 0; t < q->size(); ++t) m[t] = oracle::meet(*q, {m[t], phi[t]});
    }
    if (flat_set.count(m) == 0) return false;
    d.push_back(m);
  }
  for (Elem a = 0; a < q->size(); ++a) {
    for (Elem b = 0; b < q->size(); ++b) {
      if (!q->leq(x(a, b), oracle::sub(*q, d[a], d[b]))) return false;
    }
  }
  return true;
}

void oracle_decision(Findings& f) {
  for (const auto& t : fixture_tnorms()) {
    const auto q = finite_skeleton(t);
    const bool dc = domain_condition(t);
    const bool ar = alphaR_f_domain(t);
    f.expect(oracle::is_f_domain(alpha_L(q)) == dc, t.label() + " alpha_L skeleton disagrees");
    f.expect(oracle::is_f_domain(alpha_R(q)) == ar, t.label() + " alpha_R skeleton disagrees");
    f.expect(oracle_domain(q) == dc, t.label() + " brute-force d disagrees");
    f.note(t.label() + ": domain " + (dc ? "yes" : "no") + ", alpha_R " + (ar ? "yes" : "no"));
  }
  f.expect(!oracle_domain(mixed_chain5()), "mixed chain passes the brute-force domain check");
}

struct Criterion {
  int number;
  double budget_s;
  void (*oracle)(Findings&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, 1, oracle_axioms},        {2, 60, oracle_yoneda_adjoint}, {3, 60, oracle_flat},
      {4, 120, oracle_scott},       {5, 60, oracle_sobriety},       {6, 1, oracle_frames},
      {7, 60, oracle_interval_finite}, {8, 30, oracle_interval_grid}, {9, 60, oracle_decision},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && wanted.count(c.number) == 0) continue;
    const SuiteInfo info = *find_suite(std::to_string(c.number));
    Findings f;
    Stopwatch suite_clock;
    RunReport report;
    try {
      report = run_suite(info.name);
    } catch (const std::exception& e) {
      f.problems.push_back(std::string("suite threw: ") + e.what());
    }
    const double suite_s = suite_clock.ms() / 1000.0;
    Stopwatch oracle_clock;
    try {
      c.oracle(f);
    } catch (const std::exception& e) {
      f.problems.push_back(std::string("oracle comparison threw: ") + e.what());
    }
    const double oracle_s = oracle_clock.ms() / 1000.0;
    for (const auto& chk : report.checks) {
      if (!chk.pass) f.problems.push_back("suite check " + chk.name + ": " + chk.reason);
    }
    const bool in_budget = suite_s <= c.budget_s;
    if (!in_budget) f.problems.push_back("suite exceeded its time budget");
    const bool pass = f.problems.empty();
    all_pass = all_pass && pass;
    std::printf("criterion %d: %s  suite %.3f s (budget %g s), oracle %.3f s  %s [%zu checks]\n",
                c.number, pass ? "PASS" : "FAIL", suite_s, c.budget_s, oracle_s, info.title.c_str(),
                report.checks.size());
    for (const auto& n : f.notes) std::printf("    %s\n", n.c_str());
    for (const auto& p : f.problems) std::printf("    problem: %s\n", p.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
