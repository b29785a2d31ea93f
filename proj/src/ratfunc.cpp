#include "aq/ratfunc.hpp"

#include "aq/errors.hpp"

namespace aq {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroElement("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::monomial(const Rational& c, int k) {
  if (k >= 0) return RatFunc(Poly::monomial(c, k));
  return RatFunc(Poly(c), Poly::monomial(Rational(1), -k));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rational l = den_.lead();
  if (!l.is_one()) {
    Poly inv(l.inverse());
    num_ *= inv;
    den_ *= inv;
  }
}

bool RatFunc::is_laurent() const {
  return den_.degree() == den_.low_order();  // den is a power of x
}

bool RatFunc::is_unit_monomial() const {
  return !is_zero() && is_laurent() && num_.degree() == num_.low_order();
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw InvalidParameter("rational function is not constant: " + str());
  return num_.coeff(0);
}

RatFunc RatFunc::scale_arg(const Rational& c) const {
  if (c.is_one()) return *this;
  return RatFunc(num_.scale_arg(c), den_.scale_arg(c));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroElement("inverse of zero rational function");
  return RatFunc(den_, num_);
}

std::pair<int, std::vector<Rational>> RatFunc::expand_at_infinity(int terms) const {
  std::vector<Rational> out;
  if (is_zero()) return {0, std::vector<Rational>(static_cast<size_t>(terms), Rational(0))};
  int d = num_.degree() - den_.degree();
  // Long division by den in decreasing powers; den is monic.
  std::vector<Rational> rem = num_.coeffs();
  int dn = num_.degree();
  int dd = den_.degree();
  const auto& dc = den_.coeffs();
  for (int k = 0; k < terms; ++k) {
    int pos = dn - k;  // exponent of the current leading term of the remainder
    Rational c = (pos >= 0 && pos < static_cast<int>(rem.size())) ? rem[static_cast<size_t>(pos)]
                                                                   : Rational(0);
    out.push_back(c);
    if (c.is_zero()) continue;
    // subtract c * x^(pos - dd) * den; negative exponents extend the buffer downward
    for (int i = 0; i <= dd; ++i) {
      int e = pos - dd + i;
      if (e < 0) {
        int grow = -e;
        rem.insert(rem.begin(), static_cast<size_t>(grow), Rational(0));
        dn += grow;
        pos += grow;
        e = 0;
      }
      rem[static_cast<size_t>(e)] -= c * dc[static_cast<size_t>(i)];
    }
  }
  return {d, out};
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::str(const char* var) const {
  if (den_.is_constant()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace aq
