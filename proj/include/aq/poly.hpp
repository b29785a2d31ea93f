#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

// Dense univariate polynomial over Q, coefficient index = degree.
// Invariant: no trailing zero coefficient; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Poly(I c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly x() { return Poly({Rational(0), Rational(1)}); }
  static Poly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const;
  Rational lead() const;
  // Largest k with x^k | p (0 for the zero polynomial).
  int low_order() const;

  Rational eval(const Rational& x) const;
  // p(c * x)
  Poly scale_arg(const Rational& c) const;
  Poly shift_degree(int k) const;  // multiply by x^k, k >= 0
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str(const char* var = "x") const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Euclidean division; throws ZeroElement for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic greatest common divisor; poly_gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

Poly poly_lcm(const Poly& a, const Poly& b);

}  // namespace aq

namespace Eigen {

template <>
struct NumTraits<aq::Poly> : GenericNumTraits<aq::Poly> {
  typedef aq::Poly Real;
  typedef aq::Poly NonInteger;
  typedef aq::Poly Nested;
  typedef aq::Poly Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
};

}  // namespace Eigen
