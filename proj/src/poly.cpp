#include "aq/poly.hpp"

#include <sstream>

#include "aq/errors.hpp"

namespace aq {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational Poly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

int Poly::low_order() const {
  for (size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return static_cast<int>(k);
  }
  return 0;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::scale_arg(const Rational& c) const {
  std::vector<Rational> v(c_);
  Rational pw(1);
  for (auto& coef : v) {
    coef *= pw;
    pw *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::shift_degree(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = lead().inverse();
  std::vector<Rational> v(c_);
  for (auto& coef : v) coef *= inv;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator-(const Poly& a) {
  std::vector<Rational> v(a.c_);
  for (auto& coef : v) coef = -coef;
  return Poly(std::move(v));
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = abs(c);
    if (k == 0 || !a.is_one()) os << a;
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroElement("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<Rational> quo(static_cast<size_t>(da - db) + 1);
  Rational inv_lead = b.lead().inverse();
  for (int k = da; k >= db; --k) {
    Rational c = rem[static_cast<size_t>(k)] * inv_lead;
    quo[static_cast<size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<size_t>(k - db + i)] -= c * b.coeffs()[static_cast<size_t>(i)];
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return divmod(a * b, poly_gcd(a, b)).first.monic();
}

}  // namespace aq
