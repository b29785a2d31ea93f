#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "aq/poly.hpp"

namespace aq {

// Rational function num/den over Q in canonical form: den monic, gcd(num, den) = 1,
// zero stored as 0/1. Equality is therefore structural.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  template <std::integral I>
  RatFunc(I c) : RatFunc(Rational(c)) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  // c * x^k for any integer k.
  static RatFunc monomial(const Rational& c, int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Element of Q[x, 1/x].
  bool is_laurent() const;
  // c * x^k with c != 0: the units of Q[x, 1/x].
  bool is_unit_monomial() const;
  Rational constant_value() const;  // requires is_constant()

  // f(c * x)
  RatFunc scale_arg(const Rational& c) const;
  RatFunc inverse() const;

  // Laurent expansion at infinity: returns (d, c) with f = sum_k c[k] x^(d - k) + O(x^(d - terms)).
  std::pair<int, std::vector<Rational>> expand_at_infinity(int terms) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string str(const char* var = "x") const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace aq

namespace Eigen {

template <>
struct NumTraits<aq::RatFunc> : GenericNumTraits<aq::RatFunc> {
  typedef aq::RatFunc Real;
  typedef aq::RatFunc NonInteger;
  typedef aq::RatFunc Nested;
  typedef aq::RatFunc Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen
