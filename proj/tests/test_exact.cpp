#include "doctest.h"
#include "support.hpp"

using namespace aq;
using aqtest::Gen;
using aqtest::matq;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long k : c) v.emplace_back(k);
  return Poly(v);
}

// Sylvester resultant through the cofactor determinant; zero iff a common root exists.
Rational resultant(const Poly& a, const Poly& b) {
  int m = a.degree(), n = b.degree();
  MatQ s = zeros<Rational>(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = a.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = b.coeff(n - k);
  return aqtest::cofactor_det(s);
}

MatQ adjugate_at(const MatQ& m, const Rational& t, int sign) {
  long n = m.rows();
  MatQ a = m;
  for (long k = 0; k < n; ++k) a(k, k) += Rational(sign) * t;
  MatQ adj(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      MatQ minor(n - 1, n - 1);
      for (long i = 0, ii = 0; i < n; ++i) {
        if (i == c) continue;
        for (long j = 0, jj = 0; j < n; ++j) {
          if (j == r) continue;
          minor(ii, jj++) = a(i, j);
        }
        ++ii;
      }
      Rational v = aqtest::cofactor_det(minor);
      adj(r, c) = ((r + c) % 2 == 0) ? v : -v;
    }
  return adj;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK_THROWS_AS(Rational::parse("1//2"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("1/0"), SchemaError);
  CHECK(Rational(8).valuation(2) == 3);
  CHECK(Rational(4, 9).valuation(3) == -2);
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  Poly p = P({2, 0, 4});
  CHECK(poly_gcd(p, Poly()) == p.monic());

  Poly a = P({0, 1, 1}), b = P({-1, 0, 1});
  Poly g = poly_gcd(a, b);
  CHECK(g == P({1, 1}));
  auto [qa, ra] = divmod(a, g);
  auto [qb, rb] = divmod(b, g);
  CHECK(ra.is_zero());
  CHECK(rb.is_zero());
  CHECK(!resultant(qa, qb).is_zero());
}

TEST_CASE("poly_gcd divides and leaves coprime cofactors") {
  Gen gen(11);
  for (int t = 0; t < 60; ++t) {
    Poly c = gen.nonzero_poly(2), a = gen.nonzero_poly(3) * c, b = gen.nonzero_poly(3) * c;
    Poly g = poly_gcd(a, b);
    REQUIRE(divmod(a, g).second.is_zero());
    REQUIRE(divmod(b, g).second.is_zero());
    Poly qa = divmod(a, g).first, qb = divmod(b, g).first;
    if (qa.degree() > 0 && qb.degree() > 0) CHECK(!resultant(qa, qb).is_zero());
    CHECK(g.lead().is_one());
  }
}

TEST_CASE("field axioms on random samples") {
  Gen gen(7);
  for (int t = 0; t < 200; ++t) {
    Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
  for (int t = 0; t < 60; ++t) {
    RatFunc f = gen.ratfunc(2), g = gen.ratfunc(2), h = gen.ratfunc(2);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    if (!f.is_zero()) CHECK(f * f.inverse() == RatFunc(1));
    RatFunc renorm(f.num(), f.den());
    CHECK(renorm == f);
    CHECK(f.den().lead().is_one());
    CHECK(poly_gcd(f.num(), f.den()).degree() == 0);
  }
}

TEST_CASE("rational function substitution and expansion") {
  RatFunc f(Poly(1), P({3, -1}));  // 1/(3 - x)
  CHECK(f.scale_arg(Rational(1, 2)) == RatFunc(Poly(2), P({6, -1})));
  // 1/(x - 1) = x^-1 + x^-2 + ...
  auto [d, c] = RatFunc(Poly(1), P({-1, 1})).expand_at_infinity(5);
  CHECK(d == -1);
  for (auto& v : c) CHECK(v == Rational(1));
  // (x^2 + 1)/(x - 2) = x + 2 + 5 x^-1 + 10 x^-2
  auto [d2, c2] = RatFunc(P({1, 0, 1}), P({-2, 1})).expand_at_infinity(4);
  CHECK(d2 == 1);
  CHECK(c2 == std::vector<Rational>{2 / Rational(2), Rational(2), Rational(5), Rational(10)});
  CHECK(RatFunc::monomial(Rational(3), -2).is_unit_monomial());
  CHECK(!f.is_laurent());
}

TEST_CASE("mat_det") {
  CHECK(det<Rational>(identity<Rational>(3)) == Rational(1));
  CHECK(det<Rational>(matq({{1, 2}, {3, 4}})) == aqtest::cofactor_det(matq({{1, 2}, {3, 4}})));
  CHECK(det<Rational>(matq({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK(det<Rational>(matq({{1, 2}, {2, 4}})) == Rational(0));
  CHECK_THROWS_AS(det<Rational>(zeros<Rational>(2, 3)), NonSquare);
  Gen gen(3);
  for (int t = 0; t < 80; ++t) {
    long n = gen.integer(1, 4);
    MatQ m = gen.matrix(n, n, 3);
    CHECK(det<Rational>(m) == aqtest::cofactor_det(m));
  }
}

TEST_CASE("mat_inverse") {
  CHECK(inverse<Rational>(identity<Rational>(3)) == identity<Rational>(3));
  MatQ two(1, 1);
  two(0, 0) = Rational(2);
  CHECK(inverse<Rational>(two)(0, 0) == Rational(1, 2));
  CHECK(inverse<Rational>(matq({{1, 1}, {0, 1}})) == matq({{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(inverse<Rational>(matq({{1, 2}, {2, 4}})), Singular);
  Gen gen(5);
  for (int t = 0; t < 40; ++t) {
    MatQ m = gen.matrix(3, 3);
    if (aqtest::cofactor_det(m).is_zero()) continue;
    CHECK(mul(inverse<Rational>(m), m) == identity<Rational>(3));
  }
}

TEST_CASE("mat_nullspace") {
  CHECK(nullspace<Rational>(identity<Rational>(3)).empty());
  CHECK(nullspace<Rational>(zeros<Rational>(2, 2)).size() == 2);
  auto ns = nullspace<Rational>(matq({{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0](0, 0) == -ns[0](1, 0));
  CHECK(!ns[0](0, 0).is_zero());
  Gen gen(9);
  for (int t = 0; t < 40; ++t) {
    MatQ m = gen.matrix(gen.integer(1, 3), 4, 2);
    auto basis = nullspace<Rational>(m);
    CHECK(static_cast<long>(basis.size()) == 4 - rank<Rational>(m));
    for (auto& v : basis) CHECK(is_zero_matrix<Rational>(mul(m, v)));
  }
}

TEST_CASE("solve_linear") {
  MatQ b = matq({{3}, {-1}});
  CHECK(*solve_linear<Rational>(identity<Rational>(2), b) == b);
  CHECK(!solve_linear<Rational>(matq({{1, 1}, {1, 1}}), matq({{1}, {2}})).has_value());
  MatQ a = matq({{1, 2, 3}});
  auto x = solve_linear<Rational>(a, matq({{6}}));
  REQUIRE(x.has_value());
  CHECK(mul(a, *x) == matq({{6}}));
}

TEST_CASE("char_poly_adjugate") {
  MatQ three = matq({{3}});
  auto r = char_poly_adjugate(three);
  CHECK(r.det == P({3, -1}));
  REQUIRE(r.adj.size() == 1);
  CHECK(r.adj[0] == matq({{1}}));

  auto id = char_poly_adjugate(identity<Rational>(2));
  CHECK(id.det == P({1, -2, 1}));
  CHECK(id.adj[0] == identity<Rational>(2));
  CHECK(id.adj[1] == matq({{-1, 0}, {0, -1}}));

  auto sw = char_poly_adjugate(matq({{0, 1}, {1, 0}}));
  CHECK(sw.det == P({-1, 0, 1}));

  Gen gen(21);
  for (int t = 0; t < 30; ++t) {
    long n = gen.integer(1, 3);
    MatQ m = gen.matrix(n, n, 4);
    for (VarSign s : {VarSign::minus, VarSign::plus}) {
      int sign = s == VarSign::minus ? -1 : 1;
      auto cp = char_poly_adjugate(m, s);
      for (long t0 = -2; t0 <= 2; ++t0) {
        Rational tv(t0);
        MatQ shifted = m;
        for (long k = 0; k < n; ++k) shifted(k, k) += Rational(sign) * tv;
        CHECK(cp.det.eval(tv) == aqtest::cofactor_det(shifted));
        MatQ adj = zeros<Rational>(n, n);
        Rational pw(1);
        for (auto& c : cp.adj) {
          adj += pw * c;
          pw *= tv;
        }
        CHECK(adj == adjugate_at(m, tv, sign));
      }
    }
  }
}
