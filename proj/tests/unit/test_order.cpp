#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gstrata/order.hpp"

namespace {

using namespace gstrata;

// all exponents in N^2 of total degree <= d, admin-sorted
std::vector<Exponent> plane_sample(int d) {
  std::vector<Exponent> out;
  for (int t = 0; t <= d; ++t)
    for (int x = t; x >= 0; --x) out.push_back({x, t - x});
  return out;
}

void check_total_order_axioms(const TermOrder& o,
                              const std::vector<Exponent>& sample) {
  int n = o.n();
  Exponent zero(n, 0);
  for (const auto& a : sample) {
    CHECK(o.compare(a, a) == 0);
    if (a != zero) CHECK(o.greater(a, zero));  // 1 is the least monomial
    for (const auto& b : sample) {
      CHECK(o.compare(a, b) == -o.compare(b, a));
      if (a != b) CHECK(o.compare(a, b) != 0);
      // compatibility with multiplication
      if (o.less(a, b))
        for (int i = 0; i < n; ++i) {
          Exponent u = unit_exp(n, i);
          CHECK(o.less(exp_add(a, u), exp_add(b, u)));
        }
    }
  }
  // transitivity: sorting must produce a strictly increasing chain
  auto sorted = sample;
  std::sort(sorted.begin(), sorted.end(),
            [&](const Exponent& a, const Exponent& b) { return o.less(a, b); });
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    CHECK(o.less(sorted[i], sorted[i + 1]));
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("lex") {
  TermOrder o = TermOrder::lex(2);
  CHECK(o.greater({1, 0}, {0, 1}));   // x beats any power of y
  CHECK(o.greater({1, 0}, {0, 5}));
  CHECK(o.greater({2, 0}, {1, 7}));
  CHECK(o.less({0, 2}, {0, 3}));
  CHECK(o.compare({1, 2}, {1, 2}) == 0);
  CHECK_THROWS_AS(o.compare({1, 0, 0}, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("graded lex and graded reverse lex") {
  TermOrder gl = TermOrder::grlex(3);
  TermOrder gr = TermOrder::grevlex(3);
  // degree decides first in both
  CHECK(gl.greater({0, 0, 3}, {1, 1, 0}));
  CHECK(gr.greater({0, 0, 3}, {1, 1, 0}));
  // the classic distinguishing pair in degree 2: y^2 vs xz
  CHECK(gl.less({0, 2, 0}, {1, 0, 1}));
  CHECK(gr.greater({0, 2, 0}, {1, 0, 1}));
  // full degree-2 chain under grevlex: x2 > xy > y2 > xz > yz > z2
  std::vector<Exponent> chain = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0},
                                 {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(gr.greater(chain[i], chain[i + 1]));
}

TEST_CASE("weighted with tiebreak") {
  TermOrder o = TermOrder::weighted({1, 2}, TermOrder::lex(2));
  CHECK(o.greater({0, 2}, {3, 0}));       // weight 4 vs 3
  CHECK(o.greater({2, 0}, {0, 1}));       // tie at weight 2, lex breaks
  CHECK(o.compare({2, 0}, {2, 0}) == 0);
  // zero weights are allowed, negative are not
  CHECK_NOTHROW(TermOrder::weighted({0, 1}, TermOrder::lex(2)));
  CHECK_THROWS_AS(TermOrder::weighted({-1, 1}, TermOrder::lex(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::weighted({1, 1}, TermOrder::lex(3)),
                  std::invalid_argument);
}

TEST_CASE("variable priority") {
  // priority {1,0}: the second variable becomes the most significant
  TermOrder o = TermOrder::lex(2).with_priority({1, 0});
  CHECK(o.greater({0, 1}, {1, 0}));
  CHECK(o.greater({0, 1}, {9, 0}));
  CHECK(o.less({1, 3}, {0, 4}));
  // identity priority collapses to the plain order
  TermOrder id = TermOrder::lex(2).with_priority({0, 1});
  CHECK(id.vars_string() == "");
  CHECK(id.greater({1, 0}, {0, 1}));
  // the priority threads through a weighted tiebreak
  TermOrder w = TermOrder::weighted({1, 1}, TermOrder::lex(2))
                    .with_priority({1, 0});
  CHECK(w.greater({0, 1}, {1, 0}));  // tie at weight 1, flipped lex breaks
  CHECK_THROWS_AS(TermOrder::lex(2).with_priority({0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::lex(2).with_priority({0}),
                  std::invalid_argument);
}

TEST_CASE("total order axioms") {
  auto sample = plane_sample(3);
  check_total_order_axioms(TermOrder::lex(2), sample);
  check_total_order_axioms(TermOrder::grlex(2), sample);
  check_total_order_axioms(TermOrder::grevlex(2), sample);
  check_total_order_axioms(TermOrder::weighted({3, 1}, TermOrder::grevlex(2)),
                           sample);
  check_total_order_axioms(TermOrder::lex(2).with_priority({1, 0}), sample);
}

TEST_CASE("parse and to_string round trip") {
  for (const char* spec : {"lex", "grlex", "grevlex", "w:2,1:lex",
                           "w:0,3:grevlex"}) {
    TermOrder o = TermOrder::parse(spec, 2);
    CHECK(o.to_string() == spec);
    CHECK(o.vars_string() == "");
  }
  TermOrder o = TermOrder::parse("lex", 3, "3,2,1");
  CHECK(o.vars_string() == "3,2,1");
  CHECK(o.greater({0, 0, 1}, {5, 5, 0}));  // last variable most significant
  // parsed priority equals the programmatic one on a sample
  TermOrder p = TermOrder::lex(3).with_priority({2, 1, 0});
  for (const auto& a : {Exponent{1, 2, 0}, Exponent{0, 1, 1}})
    for (const auto& b : {Exponent{2, 0, 0}, Exponent{0, 0, 2}})
      CHECK(o.compare(a, b) == p.compare(a, b));

  CHECK_THROWS_AS(TermOrder::parse("bogus", 2), std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::parse("w:1:lex", 2), std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::parse("w:1,2", 2), std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::parse("w:1,2:bogus", 2), std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::parse("lex", 2, "1,1"), std::invalid_argument);
  CHECK_THROWS_AS(TermOrder::parse("lex", 2, "3,1"), std::invalid_argument);
}

TEST_CASE("separating weights") {
  // single constraint: first variable must outweigh the second
  auto l = find_separating_weight(2, {{{1, 0}, {0, 1}}});
  REQUIRE(l.has_value());
  CHECK((*l)[0] > (*l)[1]);

  // contradictory constraints have no solution
  CHECK_FALSE(find_separating_weight(
                  2, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}})
                  .has_value());
  CHECK_FALSE(find_separating_weight(1, {{{2}, {2}}}).has_value());

  // asymmetric system: l2 > 2 l1 > 0
  auto l2 = find_separating_weight(
      2, {{{0, 1}, {2, 0}}, {{1, 0}, {0, 0}}});
  REQUIRE(l2.has_value());
  CHECK((*l2)[1] > 2 * (*l2)[0]);
  CHECK((*l2)[0] > 0);

  // empty constraint set: the all-ones vector works
  auto l3 = find_separating_weight(3, {});
  REQUIRE(l3.has_value());
  CHECK(*l3 == std::vector<long>(3, 1));

  // higher-dimensional geometric fallback still satisfies every pair
  std::vector<std::pair<Exponent, Exponent>> pairs5;
  for (int i = 0; i + 1 < 5; ++i)
    pairs5.push_back({unit_exp(5, i + 1), unit_exp(5, i)});
  auto l5 = find_separating_weight(5, pairs5);
  REQUIRE(l5.has_value());
  for (const auto& [a, b] : pairs5) {
    long d = 0;
    for (int i = 0; i < 5; ++i) d += (*l5)[i] * (a[i] - b[i]);
    CHECK(d > 0);
  }
}

}  // TEST_SUITE
