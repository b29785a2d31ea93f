#include "aq/cm.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace aq;
using aqtest::Gen;
using aqtest::matq;

namespace {

CMPoint sample() {
  return {Rational(2), matq({{3}}), matq({{5}}), matq({{1}}), matq({{-15}})};
}

// qXY - YX + ij entry by entry, without the library product.
bool cm_equation_holds(const CMPoint& p) {
  const long n = p.n();
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      Rational v = p.i(r, 0) * p.j(0, c);
      for (long l = 0; l < n; ++l) v += p.q * p.X(r, l) * p.Y(l, c) - p.Y(r, l) * p.X(l, c);
      if (!v.is_zero()) return false;
    }
  return true;
}

GroupWord word(std::initializer_list<Letter> ls) { return {ls, Rational(1), Rational(1)}; }

}  // namespace

TEST_CASE("cm_validate") {
  CHECK(cm_validate(sample()).valid);
  CHECK(cm_equation_holds(sample()));
  auto bad = sample();
  bad.j(0, 0) = Rational(0);
  auto v = cm_validate(bad);
  CHECK(!v.valid);
  CHECK(v.diagnostic.find("qXY") != std::string::npos);
  bad = sample();
  bad.X(0, 0) = Rational(0);
  v = cm_validate(bad);
  CHECK(!v.valid);
  CHECK(v.diagnostic == "X not invertible");
  CHECK(cm_validate(empty_point(Rational(2))).valid);
}

TEST_CASE("cm_make") {
  auto p = cm_make(Rational(2), {Rational(3)}, matq({{1}}), matq({{-15}}));
  // Y = -i j / (q x - x) = 15 / 3
  CHECK(p.Y(0, 0) == Rational(5));
  CHECK(p == sample());
  CHECK_THROWS_AS(cm_make(Rational(2), {Rational(3)}, matq({{1}}), matq({{0}})), RankConditionFailed);
  CHECK_THROWS_AS(cm_make(Rational(2), {Rational(1), Rational(2)}, matq({{1}, {1}}), matq({{1, 1}})),
                  SpectralCollision);

  auto p2 = cm_make(Rational(2), {Rational(1), Rational(3)}, matq({{1}, {2}}), matq({{1, -1}}));
  CHECK(cm_validate(p2).valid);
  CHECK(cm_equation_holds(p2));

  Gen gen(41);
  for (Rational q : {Rational(2), Rational(3), Rational(2, 3)})
    for (long n = 1; n <= 3; ++n) {
      auto pt = gen.point(n, q);
      CHECK(cm_validate(pt).valid);
      CHECK(cm_equation_holds(pt));
    }
}

TEST_CASE("recover_ij") {
  auto ij = recover_ij(Rational(2), matq({{3}}), matq({{5}}));
  CHECK(ij.i == matq({{1}}));
  CHECK(ij.j == matq({{-15}}));
  CHECK_THROWS_AS(recover_ij(Rational(2), identity<Rational>(2), identity<Rational>(2)), RankNotOne);

  Gen gen(42);
  for (int t = 0; t < 10; ++t) {
    auto p = gen.point(2, Rational(3));
    auto r = recover_ij(p.q, p.X, p.Y);
    CHECK(r.i == p.i);
    CHECK(r.j == p.j);
    MatQ g = gen.matrix(2, 2);
    if (det<Rational>(g).is_zero()) continue;
    MatQ gi = inverse<Rational>(g);
    auto c = recover_ij(p.q, mul(g, p.X, gi), mul(g, p.Y, gi));
    CHECK(mul(c.i, c.j) == mul(g, p.i, p.j, gi));
  }
}

TEST_CASE("update rules preserve the equation as matrix identities") {
  Gen gen(43);
  for (int t = 0; t < 20; ++t) {
    Rational q = gen.nonzero_rational();
    MatQ X = gen.matrix(3, 3), Y = gen.matrix(3, 3);
    if (det<Rational>(Y).is_zero()) continue;
    MatQ yi = inverse<Rational>(Y);
    CHECK(q * mul(yi, X, Y) - X == mul(yi, MatQ(q * mul(X, Y) - mul(Y, X))));
    CHECK(q * mul(X, Y, X) - mul(Y, X, X) == mul(MatQ(q * mul(X, Y) - mul(Y, X)), X));
  }
}

TEST_CASE("cm_act examples") {
  auto p = sample();
  CHECK(cm_act(GroupWord{}, p) == p);
  auto g1p = cm_act(Letter::g1, p);
  CHECK(g1p.X(0, 0) == Rational(3, 5));
  CHECK(g1p.Y(0, 0) == Rational(5));
  CHECK(g1p.i(0, 0) == Rational(1));
  CHECK(g1p.j(0, 0) == Rational(-3));
  CHECK(cm_equation_holds(g1p));
  CHECK(cm_act(word({Letter::g1, Letter::g1inv}), p) == p);
  CHECK(cm_act(word({Letter::g2inv, Letter::g2}), p) == p);
  CHECK(cm_act(word({Letter::g1}), p) == g1p);
  // the leftmost letter acts last
  CHECK(cm_act(word({Letter::g1, Letter::g2}), p) == cm_act(Letter::g1, cm_act(Letter::g2, p)));
}

TEST_CASE("actions keep points valid") {
  Gen gen(44);
  for (Rational q : {Rational(2), Rational(2, 3)})
    for (long n = 1; n <= 3; ++n)
      for (int t = 0; t < 3; ++t) {
        auto p = gen.point(n, q);
        for (Letter l : {Letter::g1, Letter::g1inv, Letter::g2, Letter::g2inv}) {
          auto r = cm_act(l, p);
          CHECK(cm_validate(r).valid);
          CHECK(cm_act(inverse(l), r) == p);
        }
        auto s = cm_act(GroupWord::scaling(gen.nonzero_rational(), gen.nonzero_rational()), p);
        CHECK(cm_validate(s).valid);
      }
}

TEST_CASE("braid and torsion relations as maps") {
  Gen gen(45);
  for (long n = 1; n <= 3; ++n)
    for (int t = 0; t < 3; ++t) {
      auto p = gen.point(n, Rational(3));
      CHECK(cm_act(word({Letter::g1, Letter::g2, Letter::g1}), p) ==
            cm_act(word({Letter::g2, Letter::g1, Letter::g2}), p));
      GroupWord six;
      for (int k = 0; k < 6; ++k) {
        six.letters.push_back(Letter::g1);
        six.letters.push_back(Letter::g2);
      }
      auto back = cm_act(six, p);
      auto e = cm_equivalent(p, back);
      REQUIRE(e);
      CHECK(e->k == 0);
      CHECK(e->m == 0);
      if (n == 1) CHECK(back == p);
    }
}

TEST_CASE("scalings commute past letters through the inverse matrix action") {
  Gen gen(46);
  for (int t = 0; t < 8; ++t) {
    auto p = gen.point(gen.integer(1, 2), Rational(2));
    Rational a = gen.nonzero_rational(), b = gen.nonzero_rational();
    GroupWord g = word({Letter::g1, Letter::g2inv, Letter::g1});
    Mat2 gi = g.matrix().inverse();
    // g^-1 . (a, b) = (a^p b^q, a^r b^s) for g^-1 = [[p, q], [r, s]]
    GroupWord s2 = GroupWord::scaling(a.pow(gi.a) * b.pow(gi.b), a.pow(gi.c) * b.pow(gi.d));
    CHECK(cm_act(g, cm_act(GroupWord::scaling(a, b), p)) == cm_act(s2, cm_act(g, p)));
  }
}

TEST_CASE("cm_equivalent") {
  auto p = sample();
  auto self = cm_equivalent(p, p);
  REQUIRE(self);
  CHECK(self->k == 0);
  CHECK(self->m == 0);

  auto scaled = cm_act(GroupWord::scaling(Rational(1, 2), 1), p);
  CHECK(scaled.X(0, 0) == Rational(6));
  auto e = cm_equivalent(p, scaled);
  REQUIRE(e);
  CHECK(e->k == 1);
  CHECK(e->m == 0);

  CMPoint other{Rational(2), matq({{3}}), matq({{7}}), matq({{1}}), matq({{-21}})};
  REQUIRE(cm_validate(other).valid);
  CHECK(!cm_equivalent(p, other));

  Gen gen(47);
  for (int t = 0; t < 10; ++t) {
    auto a = gen.point(2, Rational(2, 3));
    long k = gen.integer(-2, 2), m = gen.integer(-2, 2);
    auto b = cm_act(GroupWord::scaling(a.q.pow(-k), a.q.pow(-m)), a);
    auto r = cm_equivalent(a, b);
    REQUIRE(r);
    CHECK(r->k == k);
    CHECK(r->m == m);
    CHECK(verify_equivalence(a, b, *r));
    auto back = cm_equivalent(b, a);
    REQUIRE(back);
    CHECK(back->k == -k);
  }
  CHECK(q_power_exponent(Rational(2, 3), Rational(16, 81), 2) == 2);
  CHECK(!q_power_exponent(Rational(2), Rational(7, 5), 1));
}
