#include "aq/torus.hpp"

#include <sstream>

#include "aq/errors.hpp"

namespace aq {

void check_parameter(const Rational& q) {
  if (q.is_zero() || q == Rational(1) || q == Rational(-1)) {
    throw InvalidParameter("q must be a rational different from 0, 1, -1 (got " + q.str() + ")");
  }
}

Monomial mono_mul(const Rational& q, const Monomial& u, const Monomial& v) {
  return {u.c * v.c * q.pow(-u.b * v.a), u.a + v.a, u.b + v.b};
}

Monomial mono_inverse(const Rational& q, const Monomial& u) {
  if (u.c.is_zero()) throw ZeroElement("inverse of a zero monomial");
  return {u.c.inverse() * q.pow(-u.a * u.b), -u.a, -u.b};
}

Monomial mono_pow(const Rational& q, const Monomial& u, long k) {
  Monomial base = k < 0 ? mono_inverse(q, u) : u;
  Monomial acc;
  for (long n = k < 0 ? -k : k; n > 0; --n) acc = mono_mul(q, acc, base);
  return acc;
}

TorusElement::TorusElement(Rational q, const Monomial& m) : q_(std::move(q)) {
  add_term(m.c, m.a, m.b);
}

Rational TorusElement::coeff(long a, long b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TorusElement::add_term(const Rational& c, long a, long b) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TorusElement::require_same(const TorusElement& o) const {
  if (q_ != o.q_) throw ContextMismatch("torus elements over different q: " + q_.str() + ", " + o.q_.str());
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
  return *this;
}

TorusElement& TorusElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TorusElement operator*(const TorusElement& u, const TorusElement& v) {
  u.require_same(v);
  TorusElement out(u.q_);
  for (const auto& [ku, cu] : u.terms_) {
    for (const auto& [kv, cv] : v.terms_) {
      Monomial m = mono_mul(u.q_, {cu, ku.first, ku.second}, {cv, kv.first, kv.second});
      out.add_term(m.c, m.a, m.b);
    }
  }
  return out;
}

std::string TorusElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k.first != 0) os << "*x^" << k.first;
    if (k.second != 0) os << "*y^" << k.second;
  }
  return os.str();
}

std::optional<Monomial> is_unit(const TorusElement& u) {
  if (u.terms().size() != 1) return std::nullopt;
  const auto& [k, c] = *u.terms().begin();
  return Monomial{c, k.first, k.second};
}

TorusElement transport_to_inverse_q(const TorusElement& u) {
  TorusElement out(u.q().inverse());
  for (const auto& [k, c] : u.terms()) {
    // x^a y^b -> y^a x^b = q^(ab) x^b y^a in A_{1/q}
    out.add_term(c * u.q().pow(k.first * k.second), k.second, k.first);
  }
  return out;
}

TorusAutomorphism::TorusAutomorphism(Rational alpha, Rational beta, Mat2 m)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), m_(m) {
  if (alpha_.is_zero() || beta_.is_zero()) throw InvalidParameter("automorphism scalars must be nonzero");
  if (m_.det() != 1) {
    throw BadDeterminant("automorphism matrix must have determinant 1 (got " + std::to_string(m_.det()) + ")");
  }
}

// y^b x^a = q^(-ab) x^a y^b
Monomial TorusAutomorphism::image_x(const Rational& q) const {
  return {alpha_ * q.pow(-m_.a * m_.b), m_.a, m_.b};
}

Monomial TorusAutomorphism::image_y(const Rational& q) const {
  return {beta_ * q.pow(-m_.c * m_.d), m_.c, m_.d};
}

TorusAutomorphism automorphism_from_images(const Rational& q, const Monomial& ix, const Monomial& iy) {
  return {ix.c * q.pow(ix.a * ix.b), iy.c * q.pow(iy.a * iy.b), Mat2{ix.a, ix.b, iy.a, iy.b}};
}

Monomial apply_automorphism(const Rational& q, const TorusAutomorphism& s, const Monomial& u) {
  Monomial img = mono_mul(q, mono_pow(q, s.image_x(q), u.a), mono_pow(q, s.image_y(q), u.b));
  img.c *= u.c;
  return img;
}

TorusElement apply_automorphism(const TorusAutomorphism& s, const TorusElement& u) {
  TorusElement out(u.q());
  for (const auto& [k, c] : u.terms()) {
    Monomial m = apply_automorphism(u.q(), s, Monomial{c, k.first, k.second});
    out.add_term(m.c, m.a, m.b);
  }
  return out;
}

TorusAutomorphism compose_automorphisms(const Rational& q, const TorusAutomorphism& s1,
                                        const TorusAutomorphism& s2) {
  return automorphism_from_images(q, apply_automorphism(q, s1, s2.image_x(q)),
                                  apply_automorphism(q, s1, s2.image_y(q)));
}

TorusAutomorphism inverse_automorphism(const Rational& q, const TorusAutomorphism& s) {
  TorusAutomorphism t(Rational(1), Rational(1), s.m().inverse());
  TorusAutomorphism r = compose_automorphisms(q, t, s);
  if (!r.m().is_identity()) throw ValidationFailed("automorphism inverse: matrix part is not the identity");
  return compose_automorphisms(q, TorusAutomorphism::scaling(r.alpha().inverse(), r.beta().inverse()), t);
}

TorusAutomorphism ad_unit(const Rational& q, const Rational& alpha, long a, long b) {
  if (alpha.is_zero()) throw InvalidParameter("ad_unit of a zero scalar");
  return TorusAutomorphism::scaling(q.pow(-b), q.pow(a));
}

}  // namespace aq
