#include "doctest.h"
#include "gen.hpp"
#include "syz/brane.hpp"
#include "syz/errors.hpp"

using namespace syz;

TEST_CASE("line brane validation") {
  CHECK_THROWS_AS(LineBrane(0, 1, Rational(0)), DomainError);
  CHECK_THROWS_AS(LineBrane(-1, 1, Rational(0)), DomainError);
  CHECK_THROWS_AS(LineBrane(2, 4, Rational(0)), DomainError);
  CHECK_THROWS_AS(LineBrane(2, 0, Rational(0)), DomainError);
  CHECK_NOTHROW(LineBrane(2, 1, Rational(0)));
  CHECK_NOTHROW(LineBrane(1, 0, Rational(0)));
}

TEST_CASE("eval_phi matches the closed form at random points") {
  gen::Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const LineBrane l = gen::rand_line(rng);
    const PLMultiSection pl = line_to_pl(l);
    for (int i = 0; i < 50; ++i) {
      const Rational x = gen::rand_rational(rng, 12, 60);
      CHECK(eval_phi(pl, x) == l.phi(x));
    }
  }
}

TEST_CASE("eval_phi is quasi-periodic") {
  gen::Rng rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    const LineBrane l = gen::rand_line(rng);
    const PLMultiSection pl = line_to_pl(l);
    const Rational x = gen::rand_rational(rng, 12, 60);
    CHECK(eval_phi(pl, x + Rational(pl.r)) == eval_phi(pl, x) + Rational(pl.d));
  }
}

TEST_CASE("breakpoint validation and collinear merging") {
  CHECK_THROWS_AS(
      PLMultiSection(1, 0, Rational(0),
                     {{Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(1)}}),
      DomainError);
  CHECK_THROWS_AS(PLMultiSection(1, 0, Rational(0), {{Rational(2), Rational(0)}}),
                  DomainError);
  CHECK_THROWS_AS(PLMultiSection(1, 0, Rational(0), {}), DomainError);

  // A redundant midpoint on the segment from (0,0) to (2,1) collapses.
  const PLMultiSection merged(
      2, 1, Rational(0),
      {{Rational(0), Rational(0)}, {Rational(1), Rational(1, 2)}});
  CHECK(merged.breakpoints.size() == 1);
  CHECK(eval_phi(merged, Rational(1)) == Rational(1, 2));
  CHECK(eval_phi(merged, Rational(1, 3)) == Rational(1, 6));
}

TEST_CASE("line_to_pl is a single breakpoint") {
  const LineBrane l(3, 2, Rational(1, 4), Rational(1, 2));
  const PLMultiSection pl = line_to_pl(l);
  CHECK(pl.r == 3);
  CHECK(pl.d == 2);
  CHECK(pl.b == Rational(1, 2));
  CHECK(pl.breakpoints.size() == 1);
  CHECK(pl.breakpoints[0].first == Rational(0));
  CHECK(pl.breakpoints[0].second == Rational(1, 12));
}

TEST_CASE("homology class is additive over unions") {
  gen::Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    BraneCollection a, b;
    const int na = gen::rand_int(rng, 0, 3), nb = gen::rand_int(rng, 0, 3);
    for (int i = 0; i < na; ++i) a.components.push_back(line_to_pl(gen::rand_line(rng)));
    for (int i = 0; i < nb; ++i) b.components.push_back(line_to_pl(gen::rand_line(rng)));
    BraneCollection both = a;
    both.components.insert(both.components.end(), b.components.begin(),
                           b.components.end());
    const auto ca = homology_class(a), cb = homology_class(b);
    const auto cc = homology_class(both);
    CHECK(cc.first == ca.first + cb.first);
    CHECK(cc.second == ca.second + cb.second);
  }
}
