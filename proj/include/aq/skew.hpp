#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "aq/ratfunc.hpp"
#include "aq/torus.hpp"

namespace aq {

// x_left: sum a_i(x) y^i; y_left: sum b_i(y) x^i.
enum class Side { x_left, y_left };

std::string to_string(Side s);

// Element of Q(x)[y, 1/y] (or Q(y)[x, 1/x]) as degree -> coefficient.
class SkewLaurent {
 public:
  using Coeffs = std::map<long, RatFunc>;

  SkewLaurent(Side side, Rational q) : side_(side), q_(std::move(q)) {}
  SkewLaurent(Side side, Rational q, const RatFunc& f, long deg = 0);

  Side side() const { return side_; }
  const Rational& q() const { return q_; }
  // The scalar s in (right variable) * f(v) = f(s v) * (right variable): 1/q for x_left, q for y_left.
  Rational shift() const { return side_ == Side::x_left ? q_.inverse() : q_; }

  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(long deg) const;
  void add(long deg, const RatFunc& f);
  long top() const;     // requires nonzero
  long bottom() const;  // requires nonzero

  // h * u with h in the left variable.
  SkewLaurent left_mul(const RatFunc& h) const;
  // Common denominator of all coefficients (monic).
  Poly common_denominator() const;

  SkewLaurent& operator+=(const SkewLaurent& o);
  SkewLaurent& operator-=(const SkewLaurent& o);
  friend SkewLaurent operator+(SkewLaurent u, const SkewLaurent& v) { return u += v; }
  friend SkewLaurent operator-(SkewLaurent u, const SkewLaurent& v) { return u -= v; }
  friend SkewLaurent operator*(const SkewLaurent& u, const SkewLaurent& v);
  friend SkewLaurent operator*(const Rational& c, const SkewLaurent& u) { return u.left_mul(RatFunc(c)); }
  friend bool operator==(const SkewLaurent&, const SkewLaurent&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const SkewLaurent& u) { return os << u.str(); }

 private:
  void require_same(const SkewLaurent& o) const;
  Side side_;
  Rational q_;
  Coeffs c_;
};

inline SkewLaurent skew_mul(const SkewLaurent& u, const SkewLaurent& v) { return u * v; }

SkewLaurent embed(const TorusElement& u, Side side);

// Inverse of embed on elements with Laurent-polynomial coefficients; throws InvalidParameter otherwise.
TorusElement to_torus(const SkewLaurent& u);

// Reinterprets y_left data over q as x_left data over 1/q and back (the swap x <-> y).
SkewLaurent swap_side(const SkewLaurent& u);

struct LeadingData {
  long degree;
  RatFunc top_coeff;
  long top_exp;
};

LeadingData degree_and_leading(const SkewLaurent& u);

// Truncated series sum_{k=0..depth} c[k] v^(top - k) in the right variable v.
class SkewSeries {
 public:
  SkewSeries(Side side, Rational q, long top, int depth);
  static SkewSeries from_laurent(const SkewLaurent& u, int depth);
  static SkewSeries one(Side side, const Rational& q, int depth);

  Side side() const { return side_; }
  const Rational& q() const { return q_; }
  long top() const { return top_; }
  int depth() const { return depth_; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  // Coefficient of degree deg; zero above top, throws below the truncation.
  RatFunc at(long deg) const;
  void set(long deg, RatFunc f);
  bool is_zero() const;

  // Equality of all coefficients down to the smaller truncation.
  bool agrees_with(const SkewSeries& o) const;

  std::string str() const;

 private:
  Side side_;
  Rational q_;
  long top_;
  int depth_;
  std::vector<RatFunc> c_;
};

SkewSeries series_mul(const SkewSeries& u, const SkewSeries& v);
SkewSeries series_invert(const SkewSeries& u);

struct MemberBounds {
  int x_span = 6;
  int y_span = 6;
  friend bool operator==(const MemberBounds&, const MemberBounds&) = default;
};

// Witness p with f = sum_k gens[k] * p[k] and every p[k] supported in the exponent box
// |a| <= x_span, |b| <= y_span; nullopt when none exists inside the box.
std::optional<std::vector<TorusElement>> ideal_member(const SkewLaurent& f,
                                                      const std::vector<SkewLaurent>& gens,
                                                      MemberBounds bounds);

struct MemberResult {
  std::optional<std::vector<TorusElement>> witness;
  MemberBounds used;
};

// Spans start at cap / 2^steps (rounded up) and double up to the cap.
std::vector<MemberBounds> escalation_schedule(MemberBounds cap, int steps);
MemberResult ideal_member_escalating(const SkewLaurent& f, const std::vector<SkewLaurent>& gens,
                                     MemberBounds cap, int steps);

}  // namespace aq
