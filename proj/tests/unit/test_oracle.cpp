#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gstrata/oracle.hpp"
#include "helpers.hpp"

namespace {

using namespace gstrata;
using testutil::axis;
using testutil::columns2;
using testutil::segment;
using testutil::square;

Poly P(int n, std::vector<std::pair<Exponent, Rat>> terms) {
  Poly p(n);
  for (auto& [e, c] : terms) p = p + Poly::term(e, Coef::rat(c));
  return p;
}

PointConfiguration config(std::vector<std::vector<Rat>> pts) {
  PointConfiguration c{std::move(pts)};
  c.validate();
  return c;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("rational matrices") {
  RatMat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  CHECK(a.det() == -2);
  CHECK(a.rank() == 2);

  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  RatMat prod = a * *inv;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(prod.at(i, j) == (i == j ? 1 : 0));

  auto x = a.solve({5, 11});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<Rat>{1, 2});
  CHECK(a.apply({1, 2}) == std::vector<Rat>{5, 11});

  RatMat s(2, 2);  // singular
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  CHECK(s.det() == 0);
  CHECK(s.rank() == 1);
  CHECK_FALSE(s.inverse().has_value());
  CHECK_FALSE(s.solve({1, 0}).has_value());
  CHECK(RatMat::identity(3).det() == 1);
}

TEST_CASE("normal form") {
  TermOrder lex = TermOrder::lex(2);
  std::vector<Poly> basis = {P(2, {{{1, 0}, 1}, {{0, 1}, -1}})};  // x - y
  Poly f = P(2, {{{2, 0}, 1}, {{0, 2}, 1}});                      // x^2 + y^2
  CHECK(normal_form(f, basis, lex) == P(2, {{{0, 2}, 2}}));
  CHECK(normal_form(basis[0], basis, lex).is_zero());
  CHECK(normal_form(P(2, {{{0, 1}, 1}}), basis, lex) ==
        P(2, {{{0, 1}, 1}}));  // already reduced
  CHECK(normal_form(Poly(2), basis, lex).is_zero());
}

TEST_CASE("groebner bases") {
  TermOrder lex1 = TermOrder::lex(1);
  // x^3 - x is a multiple of x^2 - 1 plus a reduction
  auto g1 = groebner_basis({P(1, {{{2}, 1}, {{0}, -1}}),
                            P(1, {{{3}, 1}, {{1}, -1}})},
                           lex1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == P(1, {{{2}, 1}, {{0}, -1}}));

  TermOrder lex = TermOrder::lex(2);
  // {xy - 1, x^2 - y} reduces to {y^3 - 1, x - y^2}
  auto g2 = groebner_basis({P(2, {{{1, 1}, 1}, {{0, 0}, -1}}),
                            P(2, {{{2, 0}, 1}, {{0, 1}, -1}})},
                           lex);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == P(2, {{{0, 3}, 1}, {{0, 0}, -1}}));
  CHECK(g2[1] == P(2, {{{1, 0}, 1}, {{0, 2}, -1}}));

  // elements come out monic and ascending by leading exponent
  auto g3 = groebner_basis({P(2, {{{2, 0}, 2}, {{0, 2}, 2}, {{0, 0}, -2}}),
                            P(2, {{{1, 0}, 3}, {{0, 1}, -3}})},
                           lex);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0] == P(2, {{{0, 2}, 1}, {{0, 0}, Rat(-1, 2)}}));
  CHECK(g3[1] == P(2, {{{1, 0}, 1}, {{0, 1}, -1}}));

  // invariance under generator shuffling and rational scaling
  std::vector<Poly> gens = {P(2, {{{1, 1}, 1}, {{0, 0}, -1}}),
                            P(2, {{{2, 0}, 1}, {{0, 1}, -1}}),
                            P(2, {{{3, 1}, 1}, {{1, 0}, -1}})};
  auto reference = groebner_basis(gens, lex);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled)
      g = g.scale(Coef::rat(Rat(1 + (int)(rng() % 7), 1 + (int)(rng() % 5))));
    CHECK(groebner_basis(shuffled, lex) == reference);
  }
}

TEST_CASE("ideal equality") {
  TermOrder lex = TermOrder::lex(1);
  std::vector<Poly> a = {P(1, {{{2}, 1}, {{0}, -1}})};           // x^2 - 1
  std::vector<Poly> b = {P(1, {{{1}, 1}, {{0}, -1}}),
                         P(1, {{{1}, 1}, {{0}, 1}})};            // x-1, x+1
  std::vector<Poly> c = {P(1, {{{1}, 1}, {{0}, -1}})};           // x - 1
  CHECK(ideal_equal(a, {a[0].scale(Coef::rat(Rat(5)))}, lex));
  CHECK_FALSE(ideal_equal(a, c, lex));
  CHECK_FALSE(ideal_equal(c, a, lex));
  // (x-1)(x+1) generate the unit ideal together, not (x^2-1)
  CHECK_FALSE(ideal_equal(a, b, lex));
  CHECK(ideal_equal(b, {P(1, {{{0}, 1}})}, lex));
}

TEST_CASE("standard set of a basis") {
  TermOrder lex = TermOrder::lex(2);
  auto g = groebner_basis({P(2, {{{1, 1}, 1}, {{0, 0}, -1}}),
                           P(2, {{{2, 0}, 1}, {{0, 1}, -1}})},
                          lex);
  auto d = basis_standard_set(g, lex);
  REQUIRE(d.has_value());
  CHECK(*d == StandardSet(2, {{0, 0}, {0, 1}, {0, 2}}));
  // a non-zero-dimensional ideal has no finite complement
  CHECK_FALSE(basis_standard_set({P(2, {{{2, 0}, 1}})}, lex).has_value());
  CHECK(*basis_standard_set({P(2, {{{1, 0}, 1}}), P(2, {{{0, 1}, 1}})}, lex) ==
        StandardSet(2, {{0, 0}}));
}

TEST_CASE("bounded membership certificates") {
  std::vector<Poly> gens = {P(2, {{{2, 0}, 1}})};  // x^2
  auto r = bounded_membership(gens, {P(2, {{{3, 1}, 1}}),   // x^3 y: yes
                                     P(2, {{{1, 0}, 1}}),   // x: no
                                     Poly(2)});             // 0: yes
  CHECK(r == std::vector<bool>{true, false, true});

  // degree bound limits the certificate search
  CHECK(bounded_membership(gens, {P(2, {{{8, 0}, 1}})}, {}, 2) ==
        std::vector<bool>{false});
  CHECK(bounded_membership(gens, {P(2, {{{8, 0}, 1}})}, {}, 6) ==
        std::vector<bool>{true});

  // graded search with the identity weights gives the same answers
  std::vector<std::vector<int>> wts = {{1, 0}, {0, 1}};
  CHECK(bounded_membership(gens, {P(2, {{{3, 1}, 1}}), P(2, {{{1, 0}, 1}})},
                           wts) == std::vector<bool>{true, false});
  // inhomogeneous input is rejected when weights are supplied
  CHECK_THROWS_AS(bounded_membership(gens,
                                     {P(2, {{{1, 0}, 1}, {{0, 1}, 1}})}, wts),
                  std::invalid_argument);

  // a genuine combination with polynomial multipliers: x, y in (x+y, x-y)
  std::vector<Poly> pm = {P(2, {{{1, 0}, 1}, {{0, 1}, 1}}),
                          P(2, {{{1, 0}, 1}, {{0, 1}, -1}})};
  CHECK(bounded_membership(pm, {P(2, {{{1, 0}, 1}}), P(2, {{{0, 1}, 1}})}) ==
        std::vector<bool>{true, true});
}

TEST_CASE("coefficient ideal equality") {
  ParamRing ra, rb;
  Coef a = Coef::var(ra.var({1, 0}, {0, 0}));
  Coef a2 = Coef::var(rb.var({1, 0}, {0, 0}));  // same name, other ring
  Coef b2 = Coef::var(rb.var({0, 1}, {0, 0}));
  CHECK(coef_ideal_equal({a}, ra, {a2.scale(Rat(3))}, rb));
  CHECK_FALSE(coef_ideal_equal({a}, ra, {b2}, rb));
  CHECK_FALSE(coef_ideal_equal({a}, ra, {a2 * a2}, rb));  // (T) vs (T^2)
  CHECK(coef_ideal_equal({}, ra, {}, rb));
}

TEST_CASE("vanishing ideal of points") {
  TermOrder lex = TermOrder::lex(2);
  // single point: basis {1}, borders x - 2 and y - 3
  PointIdeal one = point_ideal(config({{Rat(2), Rat(3)}}), lex);
  CHECK(one.delta == StandardSet(2, {{0, 0}}));
  CHECK(one.d.at({{1, 0}, {0, 0}}) == -2);
  CHECK(one.d.at({{0, 1}, {0, 0}}) == -3);

  // two points on the line: x^2 - x vanishes on {0, 1}
  PointIdeal two = point_ideal(config({{Rat(0)}, {Rat(1)}}),
                               TermOrder::lex(1));
  CHECK(two.delta == segment(2));
  CHECK(two.d.at({{2}, {1}}) == -1);
  CHECK(two.d.at({{2}, {0}}) == 0);

  // collinear points pick the axis staircase
  PointConfiguration col =
      config({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}});
  PointIdeal pc = point_ideal(col, TermOrder::grevlex(2));
  CHECK(pc.delta == axis(2, 3));
  CHECK(pc.d.at({{0, 1}, {0, 0}}) == 0);  // the row y vanishes identically

  // border members really vanish on the points
  for (const auto& [key, val] : pc.d) (void)key;
  for (const auto& a : pc.delta.border()) {
    for (const auto& pt : col.points) {
      auto mono = [&](const Exponent& e) {
        Rat v = 1;
        for (size_t i = 0; i < e.size(); ++i)
          for (int k = 0; k < e[i]; ++k) v *= pt[i];
        return v;
      };
      Rat total = mono(a);
      for (const auto& b : pc.delta.elements())
        total += pc.d.at({a, b}) * mono(b);
      CHECK(total == 0);
    }
  }

  CHECK_THROWS_AS(config({{Rat(1)}, {Rat(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(config({{Rat(1)}, {Rat(1), Rat(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(config({}), std::invalid_argument);
}

TEST_CASE("point configuration serialization") {
  PointConfiguration p = config({{Rat(1, 2), Rat(-3)}});
  auto j = p.to_json();
  PointConfiguration q = PointConfiguration::from_json(j);
  CHECK(q.points == p.points);
  // decimal strings are parsed exactly
  nlohmann::json jd;
  jd["points"] = nlohmann::json::array(
      {nlohmann::json::array({"0.5", "-3"})});
  CHECK(PointConfiguration::from_json(jd).points == p.points);
  // a bare array of points (no wrapper object) is accepted too
  CHECK(PointConfiguration::from_json(jd["points"]).points == p.points);
}

TEST_CASE("chart coefficients") {
  // x = 5 on the single point 5: positive normal-form convention, the
  // opposite sign of the vanishing-ideal tails
  PointConfiguration p1 = config({{Rat(5)}});
  StandardSet d0(1, {{0}});
  auto cc = chart_coefficients(p1, d0, {{1}});
  REQUIRE(cc.has_value());
  CHECK(cc->at({{1}, {0}}) == 5);
  PointIdeal pi = point_ideal(p1, TermOrder::lex(1));
  CHECK(pi.d.at({{1}, {0}}) == -5);

  // the basis fails when the evaluation matrix is singular
  PointConfiguration p2 = config({{Rat(1), Rat(2)}, {Rat(1), Rat(3)}});
  StandardSet dx(2, {{0, 0}, {1, 0}});  // 1, x cannot separate these
  CHECK_FALSE(chart_coefficients(p2, dx, {{0, 1}}).has_value());
  StandardSet dy(2, {{0, 0}, {0, 1}});
  auto cc2 = chart_coefficients(p2, dy, {{1, 0}});
  REQUIRE(cc2.has_value());
  CHECK(cc2->at({{1, 0}, {0, 0}}) == 1);  // x = 1 identically on P
  CHECK(cc2->at({{1, 0}, {0, 1}}) == 0);
}

TEST_CASE("stratum certification") {
  TermOrder gr = TermOrder::grevlex(2);
  PointConfiguration col =
      config({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}});
  CHECK(stratum_certifies(col, axis(2, 3), gr));
  CHECK_FALSE(stratum_certifies(col, StandardSet(2, {{0, 0}, {0, 1}, {0, 2}}),
                                gr));
  CHECK(classify_stratum(col, gr) == axis(2, 3));

  // a generic configuration lands on the stratum point_ideal reports
  PointConfiguration rnd = random_config(2, 4, 17);
  StandardSet cls = classify_stratum(rnd, gr);
  CHECK(stratum_certifies(rnd, cls, gr));
  CHECK(point_ideal(rnd, gr).delta == cls);
}

TEST_CASE("seeded generators") {
  PointConfiguration a = random_config(2, 5, 42);
  PointConfiguration b = random_config(2, 5, 42);
  PointConfiguration c = random_config(2, 5, 43);
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);
  CHECK(a.n() == 2);
  CHECK(a.size() == 5);
  CHECK_NOTHROW(a.validate());
  CHECK_THROWS_AS(random_config(0, 1, 1), std::invalid_argument);

  StandardSet sq = square();
  PointConfiguration g = grid_config(sq, 9);
  CHECK(g.size() == sq.size());
  CHECK_NOTHROW(g.validate());
  // grids realize their staircase on the nose
  CHECK(point_ideal(g, TermOrder::grevlex(2)).delta == sq);
  CHECK(stratum_certifies(g, sq, TermOrder::grevlex(2)));
  CHECK(classify_stratum(g, TermOrder::grevlex(2)) == sq);
}

}  // TEST_SUITE
