#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace aq;
using aqtest::Gen;

namespace {

// Letters of a word in x^{+-1}, y^{+-1}; rewritten to normal order one swap at a time
// using y^e x^f = q^(-ef) x^f y^e.
struct Letter {
  bool is_x;
  int e;
};

Monomial rewrite_oracle(const Rational& q, std::vector<Letter> w) {
  Rational c(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      if (!w[k].is_x && w[k + 1].is_x) {
        c *= q.pow(-w[k].e * w[k + 1].e);
        std::swap(w[k], w[k + 1]);
        changed = true;
      }
    }
  }
  long a = 0, b = 0;
  for (auto& l : w) (l.is_x ? a : b) += l.e;
  return {c, a, b};
}

std::vector<Letter> letters(long a, long b) {
  std::vector<Letter> w;
  for (long k = 0; k < std::abs(a); ++k) w.push_back({true, a > 0 ? 1 : -1});
  for (long k = 0; k < std::abs(b); ++k) w.push_back({false, b > 0 ? 1 : -1});
  return w;
}

TorusElement mono(const Rational& q, const Rational& c, long a, long b) { return {q, Monomial{c, a, b}}; }

}  // namespace

TEST_CASE("torus_mul examples") {
  Rational q(2);
  auto x = TorusElement::x(q), y = TorusElement::y(q);
  CHECK(x * y == mono(q, 1, 1, 1));
  CHECK((x * y) * (x * y) == mono(q, Rational(1, 2), 2, 2));
  CHECK(y * x == mono(q, q.inverse(), 1, 1));
  CHECK_THROWS_AS(x * TorusElement::y(Rational(3)), ContextMismatch);
}

TEST_CASE("monomial product agrees with letter-by-letter rewriting") {
  Gen gen(1);
  for (Rational q : {Rational(2), Rational(3), Rational(2, 3)}) {
    for (int t = 0; t < 100; ++t) {
      long a = gen.integer(-3, 3), b = gen.integer(-3, 3), c = gen.integer(-3, 3), d = gen.integer(-3, 3);
      auto w = letters(a, b);
      auto w2 = letters(c, d);
      w.insert(w.end(), w2.begin(), w2.end());
      CHECK(mono_mul(q, {Rational(1), a, b}, {Rational(1), c, d}) == rewrite_oracle(q, w));
    }
  }
}

TEST_CASE("defining relation and associativity") {
  Gen gen(2);
  for (Rational q : {Rational(2), Rational(3), Rational(2, 3)}) {
    auto x = TorusElement::x(q), y = TorusElement::y(q);
    CHECK(x * y == q * (y * x));
    for (int t = 0; t < 60; ++t) {
      auto u = gen.torus(q), v = gen.torus(q), w = gen.torus(q);
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * (v + w) == u * v + u * w);
    }
  }
}

TEST_CASE("is_unit") {
  Rational q(2);
  auto u = is_unit(TorusElement::constant(q, 1));
  REQUIRE(u);
  CHECK(*u == Monomial{Rational(1), 0, 0});
  CHECK(*is_unit(mono(q, 3, 2, -1)) == Monomial{Rational(3), 2, -1});
  CHECK(!is_unit(TorusElement::constant(q, 1) + TorusElement::x(q)));
  CHECK(!is_unit(TorusElement(q)));
  Monomial m{Rational(5), 2, -3};
  CHECK(mono_mul(q, m, mono_inverse(q, m)) == Monomial{});
}

TEST_CASE("apply_automorphism") {
  Rational q(2);
  auto x = TorusElement::x(q), y = TorusElement::y(q);
  Gen gen(3);
  auto u = gen.torus(q);
  CHECK(apply_automorphism(TorusAutomorphism(), u) == u);
  TorusAutomorphism g1(1, 1, kG1);
  CHECK(apply_automorphism(g1, x) == mono(q, q.inverse(), 1, 1));
  CHECK(apply_automorphism(g1, x) == y * x);
  CHECK(apply_automorphism(g1, y) == y);
  TorusAutomorphism g2(1, 1, kG2);
  CHECK(apply_automorphism(g2, y) == y * mono(q, 1, -1, 0));

  auto comm = x * y * mono(q, 1, -1, 0) * mono(q, 1, 0, -1);
  CHECK(comm == TorusElement::constant(q, q));
  for (int t = 0; t < 40; ++t) {
    TorusAutomorphism s(gen.nonzero_rational(), gen.nonzero_rational(), gen.sl2());
    CHECK(apply_automorphism(s, comm) == TorusElement::constant(q, q));
    auto a = gen.torus(q), b = gen.torus(q);
    CHECK(apply_automorphism(s, a * b) == apply_automorphism(s, a) * apply_automorphism(s, b));
    CHECK(apply_automorphism(s, a + b) == apply_automorphism(s, a) + apply_automorphism(s, b));
  }
  CHECK_THROWS_AS(TorusAutomorphism(1, 1, Mat2{0, 1, 1, 0}), BadDeterminant);
}

TEST_CASE("compose_automorphisms") {
  Gen gen(4);
  for (Rational q : {Rational(2), Rational(2, 3)}) {
    for (int t = 0; t < 30; ++t) {
      TorusAutomorphism s1(gen.nonzero_rational(), gen.nonzero_rational(), gen.sl2());
      TorusAutomorphism s2(gen.nonzero_rational(), gen.nonzero_rational(), gen.sl2());
      CHECK(compose_automorphisms(q, s1, TorusAutomorphism()) == s1);
      CHECK(compose_automorphisms(q, s1, inverse_automorphism(q, s1)) == TorusAutomorphism());
      CHECK(compose_automorphisms(q, inverse_automorphism(q, s1), s1) == TorusAutomorphism());
      auto r = compose_automorphisms(q, s1, s2);
      CHECK(r.m() == s2.m() * s1.m());
      for (int k = 0; k < 3; ++k) {
        auto u = gen.torus(q);
        CHECK(apply_automorphism(r, u) == apply_automorphism(s1, apply_automorphism(s2, u)));
      }
    }
    auto a = TorusAutomorphism::scaling(3, 5), b = TorusAutomorphism::scaling(Rational(1, 2), 7);
    CHECK(compose_automorphisms(q, a, b) == TorusAutomorphism::scaling(Rational(3, 2), 35));
  }
}

TEST_CASE("ad_unit") {
  Rational q(2);
  CHECK(ad_unit(q, 1, 0, 0) == TorusAutomorphism());
  CHECK(ad_unit(q, 1, 1, 0) == TorusAutomorphism::scaling(1, 2));
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      Monomial u{Rational(3), a, b};
      auto ad = ad_unit(q, u.c, a, b);
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          Monomial v{Rational(1), c, d};
          CHECK(apply_automorphism(q, ad, v) == mono_mul(q, mono_mul(q, u, v), mono_inverse(q, u)));
        }
    }
}

TEST_CASE("transport_to_inverse_q") {
  Rational q(2);
  CHECK(transport_to_inverse_q(TorusElement::x(q)) == TorusElement::y(q.inverse()));
  CHECK(transport_to_inverse_q(mono(q, 1, 1, 1)) == mono(q.inverse(), q, 1, 1));
  Gen gen(5);
  for (int t = 0; t < 40; ++t) {
    auto u = gen.torus(q), v = gen.torus(q);
    CHECK(transport_to_inverse_q(transport_to_inverse_q(u)) == u);
    CHECK(transport_to_inverse_q(u * v) == transport_to_inverse_q(u) * transport_to_inverse_q(v));
  }
}
