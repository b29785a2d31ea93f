#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "aq/rational.hpp"
#include "aq/sl2.hpp"

namespace aq {

// Throws InvalidParameter unless q is in Q \ {0, 1, -1}.
void check_parameter(const Rational& q);

// c * x^a * y^b, normal ordered.
struct Monomial {
  Rational c{1};
  long a = 0;
  long b = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// (x^a y^b)(x^c y^d) = q^(-bc) x^(a+c) y^(b+d)
Monomial mono_mul(const Rational& q, const Monomial& u, const Monomial& v);
Monomial mono_inverse(const Rational& q, const Monomial& u);
Monomial mono_pow(const Rational& q, const Monomial& u, long k);

// Laurent polynomial in the quantum torus, x-powers left of y-powers.
class TorusElement {
 public:
  using Key = std::pair<long, long>;
  using Terms = std::map<Key, Rational>;

  explicit TorusElement(Rational q) : q_(std::move(q)) {}
  TorusElement(Rational q, const Monomial& m);

  static TorusElement constant(const Rational& q, const Rational& c) { return {q, Monomial{c, 0, 0}}; }
  static TorusElement x(const Rational& q) { return {q, Monomial{Rational(1), 1, 0}}; }
  static TorusElement y(const Rational& q) { return {q, Monomial{Rational(1), 0, 1}}; }

  const Rational& q() const { return q_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(long a, long b) const;
  void add_term(const Rational& c, long a, long b);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement& operator*=(const Rational& c);

  friend TorusElement operator+(TorusElement u, const TorusElement& v) { return u += v; }
  friend TorusElement operator-(TorusElement u, const TorusElement& v) { return u -= v; }
  friend TorusElement operator*(TorusElement u, const Rational& c) { return u *= c; }
  friend TorusElement operator*(const Rational& c, TorusElement u) { return u *= c; }
  friend TorusElement operator*(const TorusElement& u, const TorusElement& v);
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const TorusElement& u) { return os << u.str(); }

 private:
  void require_same(const TorusElement& o) const;
  Rational q_;
  Terms terms_;
};

inline TorusElement torus_mul(const TorusElement& u, const TorusElement& v) { return u * v; }

std::optional<Monomial> is_unit(const TorusElement& u);

// Swap isomorphism A_q -> A_{1/q}, x -> y, y -> x.
TorusElement transport_to_inverse_q(const TorusElement& u);

// x -> alpha y^b x^a, y -> beta y^d x^c for m = [[a, b], [c, d]] with det m = 1.
class TorusAutomorphism {
 public:
  TorusAutomorphism() = default;
  TorusAutomorphism(Rational alpha, Rational beta, Mat2 m);

  static TorusAutomorphism scaling(const Rational& alpha, const Rational& beta) {
    return {alpha, beta, Mat2{}};
  }

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Mat2& m() const { return m_; }

  // Images of x and y in normal order.
  Monomial image_x(const Rational& q) const;
  Monomial image_y(const Rational& q) const;

  friend bool operator==(const TorusAutomorphism&, const TorusAutomorphism&) = default;

 private:
  Rational alpha_{1};
  Rational beta_{1};
  Mat2 m_{};
};

// Reads (alpha, m-row) back from normal-ordered images of x and y.
TorusAutomorphism automorphism_from_images(const Rational& q, const Monomial& ix, const Monomial& iy);

TorusElement apply_automorphism(const TorusAutomorphism& s, const TorusElement& u);
Monomial apply_automorphism(const Rational& q, const TorusAutomorphism& s, const Monomial& u);

// r with r(u) = s1(s2(u)).
TorusAutomorphism compose_automorphisms(const Rational& q, const TorusAutomorphism& s1,
                                        const TorusAutomorphism& s2);
TorusAutomorphism inverse_automorphism(const Rational& q, const TorusAutomorphism& s);

// Conjugation v -> u v u^-1 by u = alpha x^a y^b: (x, y) -> (q^-b x, q^a y).
TorusAutomorphism ad_unit(const Rational& q, const Rational& alpha, long a, long b);

}  // namespace aq
