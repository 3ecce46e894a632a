#include <stdexcept>

#include "doctest.h"
#include "gstrata/equations.hpp"
#include "gstrata/family.hpp"
#include "helpers.hpp"

namespace {

using namespace gstrata;
using testutil::segment;
using testutil::square;

Poly mono1(int e) { return Poly::term({e}, Coef::one()); }

// x^2 = x + 1, so x^k reduces to fib(k) x + fib(k-1)
FamilyMap fibonacci_seed() {
  FamilyMap fam;
  fam.emplace(Exponent{2}, mono1(2) - mono1(1) - mono1(0));
  return fam;
}

}  // namespace

TEST_SUITE("family") {

TEST_CASE("seed validation") {
  StandardSet d = segment(2);
  FamilyMap bad_key;
  bad_key.emplace(Exponent{1}, mono1(1));  // key inside the staircase
  CHECK_THROWS_AS(MarkedFamily(d, bad_key), std::invalid_argument);

  FamilyMap not_monic;
  not_monic.emplace(Exponent{2}, mono1(2).scale(Coef::rat(Rat(2))));
  CHECK_THROWS_AS(MarkedFamily(d, not_monic), std::invalid_argument);

  FamilyMap stray;  // tail support outside the staircase
  stray.emplace(Exponent{3}, mono1(3) - mono1(2));
  CHECK_THROWS_AS(MarkedFamily(d, stray), std::invalid_argument);

  CHECK_NOTHROW(MarkedFamily(d, fibonacci_seed()));
}

TEST_CASE("numeric reduction on the line") {
  MarkedFamily fam(segment(2), fibonacci_seed());
  // x^5 = 5x + 3 modulo x^2 - x - 1 (Fibonacci numbers)
  CHECK(fam.reduce(mono1(5)) ==
        mono1(1).scale(Coef::rat(5)) + mono1(0).scale(Coef::rat(3)));
  CHECK(fam.member({5}) ==
        mono1(5) - mono1(1).scale(Coef::rat(5)) - mono1(0).scale(Coef::rat(3)));
  CHECK(fam.reduce(mono1(3) + mono1(2).scale(Coef::rat(2)) + mono1(1) +
                   mono1(0)) ==
        mono1(1).scale(Coef::rat(5)) + mono1(0).scale(Coef::rat(4)));
  // members reduce to zero, basis monomials are fixed
  CHECK(fam.reduce(fam.member({4})).is_zero());
  CHECK(fam.reduce(mono1(1)) == mono1(1));
  CHECK_THROWS_AS(fam.member({1}), std::invalid_argument);
}

TEST_CASE("reduction is idempotent and linear") {
  StandardSet d = square();
  auto ring = std::make_shared<ParamRing>();
  TermOrder lex = TermOrder::lex(2);
  MarkedFamily fam(d, symbolic_corner_family(d, ring, &lex));

  Poly f = Poly::term({3, 2}, Coef::one()) + Poly::term({1, 1}, Coef::one());
  Poly g = Poly::term({2, 2}, Coef::rat(Rat(1, 2)));
  Poly rf = fam.reduce(f);
  for (const auto& [e, c] : rf.terms()) CHECK(d.contains(e));
  CHECK(fam.reduce(rf) == rf);
  CHECK(fam.reduce(f + g) == rf + fam.reduce(g));
  CHECK(fam.reduce(f.scale(Coef::rat(Rat(3)))) == rf.scale(Coef::rat(Rat(3))));
}

TEST_CASE("symbolic extension of the square") {
  // with tails restricted below the marker in lex, the second corner has
  // tail B00 + B01 y only, and the extension to (2,1) multiplies out to a
  // fixed quadratic expression in the corner coefficients
  StandardSet d = square();
  auto ring = std::make_shared<ParamRing>();
  TermOrder lex = TermOrder::lex(2);
  FamilyMap seed = symbolic_corner_family(d, ring, &lex);
  REQUIRE(seed.size() == 2);
  CHECK(seed.at({0, 2}).terms().size() == 3);  // y^2 - B01 y - B00
  CHECK(seed.at({2, 0}).terms().size() == 5);  // full tail below x^2

  Coef a00 = Coef::var(ring->var({2, 0}, {0, 0}));
  Coef a10 = Coef::var(ring->var({2, 0}, {1, 0}));
  Coef a01 = Coef::var(ring->var({2, 0}, {0, 1}));
  Coef a11 = Coef::var(ring->var({2, 0}, {1, 1}));
  Coef b00 = Coef::var(ring->var({0, 2}, {0, 0}));
  Coef b01 = Coef::var(ring->var({0, 2}, {0, 1}));

  Poly got = extend_family(seed, {2, 1}, d);
  Poly want = Poly::term({2, 1}, Coef::one()) -
              Poly::term({0, 0}, a01 * b00) - Poly::term({1, 0}, a11 * b00) -
              Poly::term({0, 1}, a00 + a01 * b01) -
              Poly::term({1, 1}, a10 + a11 * b01);
  CHECK(got == want);

  // the one-step member only multiplies the tail through
  CHECK(extend_family(seed, {1, 2}, d) ==
        Poly::term({1, 2}, Coef::one()) - Poly::term({1, 0}, b00) -
            Poly::term({1, 1}, b01));

  // reducing the marker monomial recovers the member tail
  MarkedFamily fam(d, seed);
  CHECK(fam.reduce(Poly::term({2, 1}, Coef::one())) ==
        Poly::term({2, 1}, Coef::one()) - want);
}

TEST_CASE("extension cycles are detected") {
  // unrestricted tails make (2,1) and (1,2) depend on each other
  StandardSet d = square();
  auto ring = std::make_shared<ParamRing>();
  FamilyMap seed = symbolic_corner_family(d, ring);
  CHECK_THROWS_AS(extend_family(seed, {2, 1}, d), std::runtime_error);
  CHECK_THROWS_AS(extend_family(seed, {1, 2}, d), std::runtime_error);

  // a flat staircase extends fine even without an order restriction: the
  // only non-basis tail exponent reached is the corner (3,0) itself
  StandardSet flat = testutil::columns2({1, 1, 1});
  auto ring2 = std::make_shared<ParamRing>();
  FamilyMap seed2 = symbolic_corner_family(flat, ring2);
  CHECK_NOTHROW(extend_family(seed2, {1, 1}, flat));
}

TEST_CASE("missing corner in the seed") {
  StandardSet d = square();
  auto ring = std::make_shared<ParamRing>();
  TermOrder lex = TermOrder::lex(2);
  FamilyMap seed = symbolic_corner_family(d, ring, &lex);
  seed.erase(Exponent{0, 2});
  CHECK_THROWS_AS(extend_family(seed, {0, 2}, d), std::invalid_argument);
}

}  // TEST_SUITE
