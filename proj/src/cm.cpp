#include "aq/cm.hpp"

#include "aq/errors.hpp"
#include "aq/torus.hpp"

namespace aq {

CMPoint empty_point(const Rational& q) {
  return {q, MatQ(0, 0), MatQ(0, 0), MatQ(0, 1), MatQ(1, 0)};
}

Validation cm_validate(const CMPoint& p) {
  const long n = p.n();
  if (p.q.is_zero() || p.q == Rational(1) || p.q == Rational(-1)) return {false, "q must differ from 0, 1, -1"};
  if (p.X.cols() != n || p.Y.rows() != n || p.Y.cols() != n) return {false, "X and Y must be square of size n"};
  if (p.i.rows() != n || p.i.cols() != 1) return {false, "i must be an n x 1 column"};
  if (p.j.rows() != 1 || p.j.cols() != n) return {false, "j must be a 1 x n row"};
  if (n == 0) return {};
  if (det<Rational>(p.X).is_zero()) return {false, "X not invertible"};
  if (det<Rational>(p.Y).is_zero()) return {false, "Y not invertible"};
  MatQ lhs = p.q * mul(p.X, p.Y) - mul(p.Y, p.X) + mul(p.i, p.j);
  if (!is_zero_matrix<Rational>(lhs)) return {false, "qXY - YX + ij != 0"};
  MatQ defect = p.q * mul(p.X, p.Y, inverse<Rational>(p.X), inverse<Rational>(p.Y)) - identity<Rational>(n);
  if (rank<Rational>(defect) != 1) return {false, "rank(qXYX^-1Y^-1 - 1) != 1"};
  long k = 0;
  while (k < n && p.i(k, 0).is_zero()) ++k;
  if (k == n || !p.i(k, 0).is_one()) return {false, "first nonzero entry of i is not 1"};
  return {};
}

CMPoint gauge_normalize(CMPoint p) {
  for (long k = 0; k < p.n(); ++k) {
    if (p.i(k, 0).is_zero()) continue;
    Rational c = p.i(k, 0);
    p.i = c.inverse() * p.i;
    p.j = c * p.j;
    break;
  }
  return p;
}

CMPoint cm_make(const Rational& q, const std::vector<Rational>& x_diag, const MatQ& i, const MatQ& j) {
  check_parameter(q);
  const long n = static_cast<long>(x_diag.size());
  if (i.rows() != n || i.cols() != 1 || j.rows() != 1 || j.cols() != n) {
    throw InvalidParameter("i, j dimensions do not match the spectrum");
  }
  for (long a = 0; a < n; ++a) {
    if (x_diag[static_cast<size_t>(a)].is_zero()) throw InvalidParameter("X spectrum must be nonzero");
    for (long b = 0; b < n; ++b) {
      if (a != b && x_diag[static_cast<size_t>(a)] == x_diag[static_cast<size_t>(b)]) {
        throw InvalidParameter("X spectrum must be distinct");
      }
      if (q * x_diag[static_cast<size_t>(a)] == x_diag[static_cast<size_t>(b)]) {
        throw SpectralCollision("q x_" + std::to_string(a) + " = x_" + std::to_string(b));
      }
    }
  }
  if (n > 0 && rank<Rational>(mul(i, j)) != 1) throw RankConditionFailed("ij must have rank one");
  CMPoint p{q, zeros<Rational>(n, n), zeros<Rational>(n, n), i, j};
  for (long a = 0; a < n; ++a) {
    p.X(a, a) = x_diag[static_cast<size_t>(a)];
    for (long b = 0; b < n; ++b) {
      p.Y(a, b) = -(i(a, 0) * j(0, b)) / (q * x_diag[static_cast<size_t>(a)] - x_diag[static_cast<size_t>(b)]);
    }
  }
  if (n > 0 && det<Rational>(p.Y).is_zero()) throw SingularY("Y is singular; choose another i, j");
  p = gauge_normalize(std::move(p));
  Validation v = cm_validate(p);
  if (!v.valid) throw RankConditionFailed(v.diagnostic);
  return p;
}

IJ recover_ij(const Rational& q, const MatQ& X, const MatQ& Y) {
  const long n = X.rows();
  if (det<Rational>(X).is_zero() || det<Rational>(Y).is_zero()) throw Singular("X and Y must be invertible");
  MatQ d = mul(Y, X) - q * mul(X, Y);
  if (rank<Rational>(d) != 1) throw RankNotOne("YX - qXY does not have rank one");
  long col = 0;
  while (is_zero_matrix<Rational>(MatQ(d.col(col)))) ++col;
  MatQ i = d.col(col);
  long r = 0;
  while (i(r, 0).is_zero()) ++r;
  i = i(r, 0).inverse() * i;
  MatQ j = d.row(r);
  if (mul(i, j) != d || i.rows() != n) throw ValidationFailed("rank-one factorization failed");
  return {i, j};
}

std::string to_string(Letter l) {
  switch (l) {
    case Letter::g1: return "g1";
    case Letter::g1inv: return "g1inv";
    case Letter::g2: return "g2";
    case Letter::g2inv: return "g2inv";
  }
  return "?";
}

Letter parse_letter(const std::string& s) {
  if (s == "g1") return Letter::g1;
  if (s == "g1inv") return Letter::g1inv;
  if (s == "g2") return Letter::g2;
  if (s == "g2inv") return Letter::g2inv;
  throw SchemaError("unknown letter \"" + s + "\"");
}

Letter inverse(Letter l) {
  switch (l) {
    case Letter::g1: return Letter::g1inv;
    case Letter::g1inv: return Letter::g1;
    case Letter::g2: return Letter::g2inv;
    case Letter::g2inv: return Letter::g2;
  }
  return l;
}

Mat2 letter_matrix(Letter l) {
  switch (l) {
    case Letter::g1: return kG1;
    case Letter::g1inv: return kG1.inverse();
    case Letter::g2: return kG2;
    case Letter::g2inv: return kG2.inverse();
  }
  return {};
}

Mat2 GroupWord::matrix() const {
  Mat2 m;
  for (Letter l : letters) m = m * letter_matrix(l);
  return m;
}

namespace {

CMPoint apply_letter(Letter l, CMPoint p) {
  switch (l) {
    case Letter::g1: {
      MatQ yi = inverse<Rational>(p.Y);
      p.X = mul(yi, p.X);
      p.i = mul(yi, p.i);
      break;
    }
    case Letter::g1inv:
      p.X = mul(p.Y, p.X);
      p.i = mul(p.Y, p.i);
      break;
    case Letter::g2:
      p.j = mul(p.j, p.X);
      p.Y = mul(p.Y, p.X);
      break;
    case Letter::g2inv: {
      MatQ xi = inverse<Rational>(p.X);
      p.j = mul(p.j, xi);
      p.Y = mul(p.Y, xi);
      break;
    }
  }
  return p;
}

CMPoint finish(CMPoint p) {
  p = gauge_normalize(std::move(p));
  Validation v = cm_validate(p);
  if (!v.valid) throw ValidationFailed("group action produced an invalid point: " + v.diagnostic);
  return p;
}

}  // namespace

CMPoint cm_act(Letter l, const CMPoint& p) { return finish(apply_letter(l, p)); }

CMPoint cm_act(const GroupWord& w, const CMPoint& p) {
  if (w.alpha.is_zero() || w.beta.is_zero()) throw InvalidParameter("scaling must be nonzero");
  CMPoint r = p;
  if (!w.alpha.is_one() || !w.beta.is_one()) {
    r.X = w.alpha.inverse() * r.X;
    r.Y = w.beta.inverse() * r.Y;
    r.i = (w.alpha * w.beta).inverse() * r.i;
  }
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = apply_letter(*it, std::move(r));
  return finish(std::move(r));
}

std::optional<long> q_power_exponent(const Rational& q, const Rational& r, long n) {
  if (r.is_zero()) return std::nullopt;
  unsigned long p = smallest_prime_factor(q.num() * q.den());
  long v = q.valuation(p);
  long w = r.valuation(p);
  if (w % (n * v) != 0) return std::nullopt;
  long k = w / (n * v);
  if (q.pow(k * n) != r) return std::nullopt;
  return k;
}

bool verify_equivalence(const CMPoint& p1, const CMPoint& p2, const Equivalence& e) {
  if (p1.n() != p2.n() || e.g.rows() != p1.n() || e.g.cols() != p1.n()) return false;
  if (p1.n() == 0) return true;
  if (det<Rational>(e.g).is_zero()) return false;
  return mul(e.g, p2.X) == p1.q.pow(e.k) * mul(p1.X, e.g) && mul(e.g, p2.Y) == p1.q.pow(e.m) * mul(p1.Y, e.g);
}

std::optional<Equivalence> cm_equivalent(const CMPoint& p1, const CMPoint& p2) {
  if (p1.q != p2.q) throw ContextMismatch("points over different q");
  const long n = p1.n();
  if (p2.n() != n) return std::nullopt;
  if (n == 0) return Equivalence{MatQ(0, 0), 0, 0};
  const Rational& q = p1.q;
  auto k = q_power_exponent(q, det<Rational>(p2.X) / det<Rational>(p1.X), n);
  auto m = q_power_exponent(q, det<Rational>(p2.Y) / det<Rational>(p1.Y), n);
  if (!k || !m) return std::nullopt;

  // unknown g(r, c) at index r * n + c
  const MatQ a1 = q.pow(*k) * p1.X, b1 = q.pow(*m) * p1.Y;
  MatQ sys = zeros<Rational>(2 * n * n, n * n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      long row = r * n + c;
      for (long l = 0; l < n; ++l) {
        // (g X2 - A1 g)(r, c) and (g Y2 - B1 g)(r, c)
        sys(row, r * n + l) += p2.X(l, c);
        sys(row, l * n + c) -= a1(r, l);
        sys(n * n + row, r * n + l) += p2.Y(l, c);
        sys(n * n + row, l * n + c) -= b1(r, l);
      }
    }
  auto basis = nullspace<Rational>(sys);
  if (basis.empty()) return std::nullopt;

  // det(sum_s t_s B_s) has degree <= n in each t_s, so it vanishes on {0..n}^d only if it is zero.
  const size_t d = basis.size();
  std::vector<long> t(d, 0);
  while (true) {
    MatQ g = zeros<Rational>(n, n);
    for (size_t s = 0; s < d; ++s) {
      if (t[s] == 0) continue;
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) g(r, c) += Rational(t[s]) * basis[s](r * n + c, 0);
    }
    if (!det<Rational>(g).is_zero()) {
      Equivalence e{g, *k, *m};
      if (!verify_equivalence(p1, p2, e)) throw ValidationFailed("equivalence witness failed verification");
      return e;
    }
    size_t s = 0;
    while (s < d && t[s] == n) t[s++] = 0;
    if (s == d) break;
    ++t[s];
  }
  return std::nullopt;
}

}  // namespace aq
