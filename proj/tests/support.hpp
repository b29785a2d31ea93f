#pragma once

#include <random>
#include <vector>

#include "aq/cm.hpp"
#include "aq/matrix.hpp"
#include "aq/torus.hpp"

namespace aqtest {

using aq::Rational;

struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long span = 9) {
    long num = integer(-span, span);
    long den = integer(1, span);
    return Rational(num, den);
  }
  Rational nonzero_rational(long span = 9) {
    Rational r;
    do r = rational(span);
    while (r.is_zero());
    return r;
  }
  aq::Poly poly(int max_deg, long span = 5) {
    std::vector<Rational> c;
    int d = static_cast<int>(integer(0, max_deg));
    for (int k = 0; k <= d; ++k) c.push_back(rational(span));
    return aq::Poly(c);
  }
  aq::Poly nonzero_poly(int max_deg, long span = 5) {
    aq::Poly p;
    do p = poly(max_deg, span);
    while (p.is_zero());
    return p;
  }
  aq::RatFunc ratfunc(int max_deg) { return aq::RatFunc(poly(max_deg), nonzero_poly(max_deg)); }
  aq::TorusElement torus(const Rational& q, int terms = 3, long span = 2) {
    aq::TorusElement u(q);
    for (int t = 0; t < terms; ++t)
      u.add_term(Rational(integer(-4, 4)), integer(-span, span), integer(-span, span));
    return u;
  }
  aq::Mat2 sl2(int steps = 4) {
    aq::Mat2 m;
    for (int s = 0; s < steps; ++s) {
      long k = integer(-2, 2);
      m = m * (coin() ? aq::Mat2{1, k, 0, 1} : aq::Mat2{1, 0, k, 1});
    }
    return m;
  }
  // Seeded valid point through cm_make; retries on degenerate draws.
  aq::CMPoint point(long n, const Rational& q) {
    while (true) {
      std::vector<Rational> xs;
      while (static_cast<long>(xs.size()) < n) {
        Rational v(integer(-6, 6), integer(1, 2));
        if (v.is_zero()) continue;
        bool ok = true;
        for (auto& w : xs) ok = ok && w != v && q * w != v && q * v != w;
        if (ok) xs.push_back(v);
      }
      aq::MatQ i(n, 1), j(1, n);
      for (long k = 0; k < n; ++k) {
        i(k, 0) = nonzero_rational(4);
        j(0, k) = nonzero_rational(4);
      }
      try {
        return aq::cm_make(q, xs, i, j);
      } catch (const aq::Error&) {
      }
    }
  }
  aq::MatQ matrix(long rows, long cols, long span = 5) {
    aq::MatQ m(rows, cols);
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c) m(r, c) = Rational(integer(-span, span));
    return m;
  }
};

// Laplace expansion along the first row; independent of the elimination code.
inline Rational cofactor_det(const aq::MatQ& m) {
  const long n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (long c = 0; c < n; ++c) {
    aq::MatQ minor(n - 1, n - 1);
    for (long r = 1; r < n; ++r) {
      long cc = 0;
      for (long k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    Rational term = m(0, c) * cofactor_det(minor);
    if (c % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

inline aq::MatQ matq(std::initializer_list<std::initializer_list<long>> rows) {
  aq::MatQ m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()));
  long r = 0;
  for (auto& row : rows) {
    long c = 0;
    for (long v : row) m(r, c++) = Rational(v);
    ++r;
  }
  return m;
}

}  // namespace aqtest
