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
#include "quantopia/flat.hpp"
#include "quantopia/suites.hpp"

using namespace quantopia;

namespace {

QFun fun(std::vector<Elem> v) { return QFun(std::move(v)); }

std::set<QFun> as_set(const std::vector<QFun>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("pitchfork") {
  const auto l = mv_chain(3);
  CHECK(pitchfork(*l, fun({0, 0, 0}), fun({2, 1, 0})) == 0);
  const auto x = alpha_L(l);
  CHECK(pitchfork(*l, yoneda(x, 1), fun({0, 1, 2})) == 1);
}

TEST_CASE("flatness on two-point examples") {
  const auto b = boolean_quantale();
  const auto d = discrete_qorder(b, 2);
  const FlatVerdict v = check_flat(d, fun({1, 1}));
  CHECK_FALSE(v.flat);
  CHECK(v.inhabited);
  REQUIRE(v.witness);
  CHECK(as_set({v.witness->first, v.witness->second}) == as_set({fun({1, 0}), fun({0, 1})}));
  CHECK(as_set(flat_ideals(d).ideals) == as_set({fun({1, 0}), fun({0, 1})}));
  const auto a = alpha_L(b);
  CHECK(is_flat(a, fun({1, 0})));
  CHECK(is_flat(a, fun({1, 1})));
  CHECK(as_set(flat_ideals(a).ideals) == as_set({fun({1, 0}), fun({1, 1})}));
  CHECK_FALSE(is_flat(a, fun({0, 0})));
}

TEST_CASE("representables are flat and flat ideals match the oracle") {
  for (const auto& q : chain_fixtures(4)) {
    for (const auto& x : small_qorders(q, 2)) {
      const FlatIdealSet fx = flat_ideals(x);
      for (Point a = 0; a < x.size(); ++a) CHECK(fx.index_of(yoneda(x, a)).has_value());
      CHECK(as_set(fx.ideals) == as_set(oracle::flat_ideals(x)));
    }
  }
}

TEST_CASE("frame-valued criterion") {
  for (const auto& q : {boolean_quantale(), godel_chain(3)}) {
    for (const auto& x : small_qorders(q, 3)) {
      for (const auto& phi : weights(x)) CHECK(frame_ideal_condition(x, phi) == is_flat(x, phi));
    }
  }
}

TEST_CASE("way-below on canonical orders") {
  const auto g = godel_chain(3);
  const auto x = alpha_L(g);
  const Matrix<Elem> w = way_below(x);
  for (Elem y = 0; y < 3; ++y) {
    for (Elem a = 0; a < 3; ++a) CHECK(w(y, a) == g->join(a, g->impl(y, 0)));
  }
  const Matrix<Elem> wb = way_below(alpha_L(boolean_quantale()));
  CHECK(wb(1, 0) == 0);
  CHECK(wb(0, 1) == 1);
  for (const auto& q : chain_fixtures(4)) {
    for (const auto& y : small_qorders(q, 2)) {
      const Matrix<Elem> m = way_below(y);
      for (Point a = 0; a < y.size(); ++a) {
        for (Point b = 0; b < y.size(); ++b) CHECK(q->leq(m(a, b), y(a, b)));
      }
    }
  }
}

TEST_CASE("F-cocompleteness and F-domains") {
  CHECK(is_f_cocomplete(alpha_L(mv_chain(3))));
  CHECK(is_f_cocomplete(discrete_qorder(boolean_quantale(), 2)));
  CHECK(is_f_domain(alpha_L(godel_chain(3))).holds);
  CHECK(is_f_domain(alpha_L(mv_chain(3))).holds);
  for (const auto& [label, x] : scott_pipeline_instances()) {
    CAPTURE(label);
    const FDomainCertificate c = is_f_domain(x);
    CHECK(c.holds);
    CHECK(oracle::is_f_domain(x));
    CHECK_FALSE(interpolation_check(x, c.way_below).has_value());
  }
  CHECK(interpolation_check(alpha_L(boolean_quantale()), way_below(alpha_L(boolean_quantale()))) ==
        std::nullopt);
}

TEST_CASE("Goedel alpha_R is not an F-domain") {
  const FDomainCertificate c = is_f_domain(alpha_R(godel_chain(3)));
  CHECK_FALSE(c.holds);
  CHECK_FALSE(c.reason.empty());
  CHECK(c.point.has_value());
}

TEST_CASE("the enumeration cap is enforced") {
  Limits tiny;
  tiny.enumeration_cap = 10;
  CHECK_THROWS_AS(flat_ideals(alpha_L(mv_chain(4)), tiny), CapExceeded);
}
