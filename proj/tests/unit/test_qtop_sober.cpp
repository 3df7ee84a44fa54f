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

#include <set>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "quantopia/qtop.hpp"
#include "quantopia/sober.hpp"
#include "quantopia/suites.hpp"

using namespace quantopia;

namespace {

QFun fun(std::vector<Elem> v) { return QFun(std::move(v)); }

std::set<QFun> as_set(const std::vector<QFun>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("generated topologies") {
  const auto b = boolean_quantale();
  const QTopSpace c = generate_topology(b, {"x", "y"}, {});
  CHECK(as_set(c.opens) == as_set({fun({0, 0}), fun({1, 1})}));
  const auto g = godel_chain(3);
  const QTopSpace s = generate_topology(g, g->names(), {fun({0, 1, 2})});
  CHECK(as_set(s.opens) == as_set(sierpinski_family(*g)));
  CHECK(s.opens == sierpinski(g).opens);
  const QTopSpace full = generate_topology(b, {"x", "y"}, all_maps(*b, 2));
  CHECK(full.opens.size() == 4);
}

TEST_CASE("Sierpinski spaces") {
  CHECK(as_set(sierpinski(boolean_quantale()).opens) ==
        as_set({fun({0, 0}), fun({0, 1}), fun({1, 1})}));
  const auto l = mv_chain(3);
  CHECK(as_set(sierpinski(l).opens) == as_set(sierpinski_family(*l)));
  for (const auto& q : chain_fixtures(5)) CHECK(validate_topology(sierpinski(q)).ok());
}

TEST_CASE("interior") {
  const QTopSpace s = sierpinski(godel_chain(3));
  for (const auto& o : s.opens) CHECK(interior(s, o) == o);
  CHECK(interior(s, fun({2, 2, 2})) == fun({2, 2, 2}));
  for (const auto& f : all_maps(*s.quantale, 3)) {
    const QFun i = interior(s, f);
    CHECK(s.is_open(i));
    for (std::size_t k = 0; k < 3; ++k) CHECK(s.quantale->leq(i[k], f[k]));
    CHECK(interior(s, i) == i);
  }
}

TEST_CASE("continuity") {
  const auto b = boolean_quantale();
  const QTopSpace s = sierpinski(b);
  const QTopSpace c = constants_space(b, 2);
  CHECK(is_continuous(s, s, {0, 1}));
  CHECK(is_continuous(s, s, {1, 1}));
  CHECK(is_continuous(c, s, {1, 1}));
  CHECK_FALSE(is_continuous(c, s, {0, 1}));
}

TEST_CASE("specialization and T0") {
  const auto b = boolean_quantale();
  const QOrderedSet d = specialization(full_space(b, 2));
  CHECK(d(0, 1) == 0);
  CHECK(d(0, 0) == 1);
  const QOrderedSet i = specialization(constants_space(b, 2));
  CHECK(i(0, 1) == 1);
  CHECK(is_t0(sierpinski(b)));
  CHECK_FALSE(is_t0(constants_space(b, 2)));
  CHECK(is_t0(scott_topology(alpha_L(mv_chain(3))).space));
}

TEST_CASE("Scott topologies") {
  const auto b = boolean_quantale();
  CHECK(as_set(scott_topology(alpha_L(b)).space.opens) ==
        as_set({fun({0, 0}), fun({0, 1}), fun({1, 1})}));
  for (const auto& q : {godel_chain(3), godel_chain(4)}) {
    CHECK(scott_topology(alpha_L(q)).space.opens == sierpinski(q).opens);
  }
  const auto l = mv_chain(4);
  const ScottSpace s = scott_topology(alpha_L(l));
  CHECK(validate_topology(s.space).ok());
  for (Elem c = 0; c < l->size(); ++c) CHECK(s.space.is_open(constant_fun(4, c)));
  const auto x = alpha_L(l);
  CHECK(as_set(s.space.opens) == as_set(oracle::scott_opens(x, oracle::flat_ideals(x))));
}

TEST_CASE("Scott interior through the way-below relation") {
  for (const auto& [label, x] : scott_pipeline_instances()) {
    CAPTURE(label);
    const auto& q = x.quantale();
    const ScottSpace s = scott_topology(x);
    const Matrix<Elem> w = way_below(x);
    for (const auto& psi : coweights(x)) {
      QFun expect{std::vector<Elem>(x.size(), q.bottom())};
      for (Point b = 0; b < x.size(); ++b) {
        for (Point a = 0; a < x.size(); ++a) expect[b] = q.join(expect[b], q.mul(w(a, b), psi[a]));
      }
      CHECK(interior(s.space, psi) == expect);
    }
  }
}

TEST_CASE("open-set modules and their points") {
  const auto b = boolean_quantale();
  const QModule m = open_set_module(sierpinski(b));
  CHECK(m.size() == 3);
  CHECK(validate_module(m).ok());
  CHECK(validate_module(open_set_module(sierpinski(godel_chain(3)))).ok());
  CHECK(points(m).size() == 2);
  CHECK(points(open_set_module(constants_space(b, 2))).size() == 1);
  for (const auto& q : {godel_chain(3), mv_chain(3)}) {
    const QModule o = open_set_module(sierpinski(q));
    CHECK(as_set(points(o)) == as_set(*oracle::points(o, 1'000'000)));
  }
}

TEST_CASE("sobriety") {
  const auto b = boolean_quantale();
  CHECK(is_sober(sierpinski(godel_chain(3))));
  const SobrietyCertificate c = eta(constants_space(b, 2));
  CHECK(c.verdict == SobrietyVerdict::not_t0);
  CHECK(c.pair.has_value());
  CHECK(to_string(SobrietyVerdict::sober) == "sober");
}

TEST_CASE("sobrification") {
  const auto b = boolean_quantale();
  const QTopSpace s = sierpinski(b);
  const Sobrification so = sobrify(s);
  CHECK(so.points.size() == 2);
  CHECK(so.space.opens.size() == 3);
  CHECK(is_homeomorphism(s, so.space, so.eta));
  const Sobrification one = sobrify(constants_space(b, 2));
  CHECK(one.space.size() == 1);
  CHECK(is_sober(one.space));
  CHECK_FALSE(is_homeomorphism(constants_space(b, 2), one.space, one.eta));
  for (const auto& [label, t] : sobriety_fixture_spaces(7)) {
    CAPTURE(label);
    const Sobrification r = sobrify(t);
    CHECK(is_sober(r.space));
    CHECK(is_continuous(t, r.space, r.eta));
    CHECK(is_homeomorphism(t, r.space, r.eta) == is_sober(t));
  }
}

TEST_CASE("spatiality") {
  CHECK(is_spatial(open_set_module(sierpinski(mv_chain(3)))));
  CHECK(is_spatial(self_module(mv_chain(4))));
  CHECK(is_spatial(self_module(godel_chain(3))));
  const SpatialityReport d = spatiality(diamond_module());
  CHECK_FALSE(d.spatial);
  CHECK(d.point_count == 0);
}

TEST_CASE("meet with r as a module homomorphism") {
  for (const auto& q : {boolean_quantale(), godel_chain(3)}) {
    for (Elem r = 0; r < q->size(); ++r) CHECK_FALSE(meet_homomorphism_failure(*q, r));
  }
  const auto l = mv_chain(3);
  const auto f = meet_homomorphism_failure(*l, l->at("1/2"));
  REQUIRE(f);
  CHECK(f->condition == "action");
  CHECK(f->r == l->at("1/2"));
}
