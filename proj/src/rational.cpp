#include "aq/rational.hpp"

#include <regex>

#include "aq/errors.hpp"

namespace aq {

Rational::Rational(long num, long den) {
  if (den == 0) throw ZeroElement("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ZeroElement("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view s) {
  static const std::regex re(R"(^\s*(-?[0-9]+)(?:/([0-9]+))?\s*$)");
  std::string str(s);
  std::smatch m;
  if (!std::regex_match(str, m, re)) {
    throw SchemaError("malformed rational \"" + str + "\"");
  }
  mpz_class num(m[1].str(), 10);
  mpz_class den(1);
  if (m[2].matched) {
    den = mpz_class(m[2].str(), 10);
    if (den == 0) throw SchemaError("zero denominator in \"" + str + "\"");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    throw InvalidParameter("rational " + str() + " is not a machine integer");
  }
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroElement("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(n, d);
}

long Rational::valuation(unsigned long p) const {
  if (is_zero()) throw ZeroElement("valuation of zero");
  mpz_class prime(p), tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), v_.get_num_mpz_t(), prime.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), v_.get_den_mpz_t(), prime.get_mpz_t()));
  return vn - vd;
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroElement("division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

unsigned long smallest_prime_factor(const mpz_class& n) {
  mpz_class m = ::abs(n);
  if (m < 2) throw InvalidParameter("no prime factor of " + n.get_str());
  for (unsigned long p = 2; p < 1000000; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return p;
    if (mpz_class(p) * p > m) break;
  }
  if (!m.fits_ulong_p()) throw InvalidParameter("parameter too large to factor: " + n.get_str());
  return m.get_ui();
}

}  // namespace aq
