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

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "quantopia/qorder.hpp"
#include "quantopia/suites.hpp"

using namespace quantopia;

namespace {

QFun fun(std::vector<Elem> v) { return QFun(std::move(v)); }

}  // namespace

TEST_CASE("canonical orders validate") {
  const auto l = mv_chain(3);
  const auto x = alpha_L(l);
  CHECK(validate_qorder(*l, x.carrier(), x.matrix()).ok());
  const auto d = discrete_qorder(boolean_quantale(), 2);
  CHECK(validate_qorder(*d.quantale_ptr(), d.carrier(), d.matrix()).ok());
}

TEST_CASE("irreflexive matrix names the point") {
  const auto b = boolean_quantale();
  Matrix<Elem> m(2, 2, 0);
  m(1, 1) = 1;
  const ValidationReport r = validate_qorder(*b, {"x", "y"}, m);
  REQUIRE(r.has_violation("reflexive"));
  CHECK(r.find("reflexive")->witness == std::vector<std::string>{"x"});
  CHECK_THROWS_AS(QOrderedSet(b, {"x", "y"}, m), InvalidInstance);
}

TEST_CASE("underlying order and separation") {
  const auto l = alpha_L(mv_chain(3));
  const Matrix<bool> u = underlying_order(l);
  for (Point a = 0; a < 3; ++a) {
    for (Point b = 0; b < 3; ++b) CHECK(static_cast<bool>(u(a, b)) == (a <= b));
  }
  CHECK(is_separated(l));
  CHECK_FALSE(is_separated(indiscrete_qorder(boolean_quantale(), 2)));
  const Matrix<bool> r = underlying_order(alpha_R(boolean_quantale()));
  CHECK(r(1, 0));
  CHECK_FALSE(r(0, 1));
}

TEST_CASE("sub on functions") {
  const auto l = mv_chain(3);
  const QFun one = fun({2, 2, 2});
  const QFun half = fun({1, 1, 1});
  CHECK(sub_order(*l, one, half) == 1);
  for (const auto& f : all_maps(*l, 2)) CHECK(sub_order(*l, f, f) == l->top());
}

TEST_CASE("Yoneda") {
  const auto x = alpha_L(boolean_quantale());
  CHECK(yoneda(x, 0) == fun({1, 0}));
  for (const auto& q : chain_fixtures(4)) {
    for (const auto& y : small_qorders(q, 2)) {
      for (const auto& phi : weights(y)) {
        for (Point a = 0; a < y.size(); ++a) CHECK(sub_order(*q, yoneda(y, a), phi) == phi[a]);
      }
    }
  }
}

TEST_CASE("weights and coweights match the oracle") {
  for (const auto& q : {boolean_quantale(), mv_chain(3)}) {
    for (const auto& y : small_qorders(q, 3)) {
      for (const auto& f : all_maps(*q, y.size())) {
        CHECK(is_weight(y, f) == oracle::is_weight(y, f));
        CHECK(is_coweight(y, f) == oracle::is_coweight(y, f));
      }
    }
  }
}

TEST_CASE("suprema and infima") {
  const auto b = boolean_quantale();
  const auto d = discrete_qorder(b, 2);
  CHECK(weight_sup(d, fun({1, 0})) == Point{0});
  CHECK_FALSE(weight_sup(d, fun({1, 1})).has_value());
  CHECK_FALSE(coweight_inf(d, fun({1, 1})).has_value());
  const auto l = alpha_L(mv_chain(3));
  CHECK(coweight_inf(l, fun({2, 2, 2})) == Point{0});
  CHECK(is_cocomplete(l));
  CHECK_FALSE(is_cocomplete(d));
  CHECK(is_cocomplete(inclusion_qorder(b, 2)));
}

TEST_CASE("adjoints") {
  const auto b = alpha_L(boolean_quantale());
  const PointMap id = {0, 1};
  CHECK(is_adjoint(b, b, id, id).holds);
  const AdjointCheck bad = is_adjoint(b, b, id, {0, 0});
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == std::pair<Point, Point>{1, 1});
  const auto q = mv_chain(4);
  const auto x = alpha_L(q);
  for (Elem r = 0; r < q->size(); ++r) {
    PointMap f(q->size());
    PointMap g(q->size());
    for (Elem a = 0; a < q->size(); ++a) {
      f[a] = q->mul(r, a);
      g[a] = q->impl(r, a);
    }
    CHECK(is_adjoint(x, x, f, g).holds);
    CHECK(adjoint_by_characterization(x, x, f, g));
  }
}

TEST_CASE("pushforward and pullback form an adjunction") {
  const auto q = mv_chain(3);
  const auto xs = small_qorders(q, 2);
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      for (const auto& f : all_point_maps(x.size(), y.size())) {
        if (!preserves_order(x, y, f)) continue;
        for (const auto& phi : weights(x)) {
          for (const auto& psi : weights(y)) {
            CHECK(sub_order(*q, pushforward(x, y, f, phi), psi) ==
                  sub_order(*q, phi, pullback(x, y, f, psi)));
          }
        }
      }
    }
  }
}

TEST_CASE("tensors") {
  const auto q = mv_chain(4);
  const auto x = alpha_L(q);
  for (Elem r = 0; r < q->size(); ++r) {
    for (Point a = 0; a < x.size(); ++a) {
      CHECK(tensor(x, r, a) == Point{q->mul(r, static_cast<Elem>(a))});
      QFun w = yoneda(x, a);
      for (auto& v : w.values) v = q->mul(r, v);
      CHECK(tensor(x, r, a) == weight_sup(x, w));
    }
    CHECK(tensor(x, q->unit(), 2) == Point{2});
  }
}

TEST_CASE("modules and complete Q-lattices") {
  const auto q = mv_chain(3);
  CHECK(validate_module(self_module(q)).ok());
  CHECK(module_to_qlattice(self_module(q)) == alpha_L(q));
  CHECK(qlattice_to_module(alpha_L(q)) == self_module(q));
  const QModule p = power_module(boolean_quantale(), 2);
  CHECK(validate_module(p).ok());
  const QOrderedSet inc = module_to_qlattice(p);
  CHECK(inc.matrix() == inclusion_qorder(boolean_quantale(), 2).matrix());
  QModule broken = self_module(q);
  broken.action(q->unit(), 1) = 0;
  CHECK_FALSE(validate_module(broken).ok());
}
