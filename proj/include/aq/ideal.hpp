#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aq/cm.hpp"
#include "aq/picard.hpp"
#include "aq/skew.hpp"

namespace aq {

// Right ideal sum_k gens[k] * A_q inside Q(x)[y^+-1] (x_left) or Q(y)[x^+-1] (y_left).
struct FractionalIdeal {
  Side side = Side::x_left;
  Rational q{2};
  std::vector<SkewLaurent> gens;

  static FractionalIdeal unit(Side side, const Rational& q);
  friend bool operator==(const FractionalIdeal&, const FractionalIdeal&) = default;
};

// Search limits shared by membership and unit searches.
struct SearchConfig {
  MemberBounds membership{6, 6};
  int escalation_steps = 2;
  int unit_bound = 4;
  int series_depth = 10;
  unsigned long seed = 1;
};

// det(X - x) and det(Y - y) - j (X - qx)^-1 adj(Y - y) i.
FractionalIdeal omega_x(const CMPoint& p);
// det(Y - y) and det(X - x) + j (qY - y)^-1 adj(X - x) i.
FractionalIdeal omega_y(const CMPoint& p);

struct KappaData {
  CMPoint point;
  int depth = 0;
  std::vector<std::vector<Rational>> a;  // a[s][r] = q^s j Y^s X^r i, 0 <= s, r <= depth
  SkewSeries kappa;
  SkewSeries kappa_inv;
};

// kappa = 1 + sum_s c_s(x) y^(-s-1) with c_s(x) = q^s j Y^s (q^(s+1) x - X)^-1 i,
// kappa^-1 = 1 + sum_s j (X - qx)^-1 Y^s i y^(-s-1), both x_left.
KappaData kappa_series(const CMPoint& p, int depth);

// a_sr = q^s j Y^s X^r i
Rational kappa_coefficient(const CMPoint& p, long s, long r);

// c_1..c_n with 1 = sum_p c_p X^p (from the characteristic polynomial).
std::vector<Rational> cayley_hamilton_coeffs(const MatQ& X);

// Divides by the generator of the leading-coefficient ideal (x_left only).
FractionalIdeal normalize_ideal(const FractionalIdeal& I, const SearchConfig& cfg = {});

struct LeadIdeal {
  RatFunc generator;  // monic numerator and denominator, no factor of x
  std::vector<SkewLaurent> elements;  // generators and the combinations harvested from them
};
// Bounded saturation of the Q[x^+-1]-module of leading coefficients (x_left).
LeadIdeal leading_ideal(const FractionalIdeal& I, const SearchConfig& cfg = {});

struct ConditionReport {
  bool meets_laurent = false;  // some generator is a(x) y^k, so I meets Q[x^+-1]
  bool laurent_leads = false;  // sampled right multiples have leads in Q[x^+-1]
  bool unit_lead = false;      // some harvested element has a unit monomial lead
  int samples = 0;
};
ConditionReport check_conditions(const FractionalIdeal& I, int samples, unsigned long seed,
                                 const SearchConfig& cfg = {});

// u = alpha x^m y^k with I2 = u I1.
struct UnitWitness {
  Rational alpha{1};
  long m = 0;
  long k = 0;
  friend bool operator==(const UnitWitness&, const UnitWitness&) = default;
};

struct IsoResult {
  std::optional<UnitWitness> unit;
  MemberBounds bounds_used;
};

// u I as the right ideal generated by u G u^-1.
FractionalIdeal unit_translate(const FractionalIdeal& I, long m, long k);

// Mutual inclusion of the two ideals within the configured spans.
bool ideals_equal(const FractionalIdeal& I1, const FractionalIdeal& I2, const SearchConfig& cfg,
                  MemberBounds* used = nullptr);

IsoResult ideal_isomorphic(const FractionalIdeal& I1, const FractionalIdeal& I2, const SearchConfig& cfg = {});
IsoResult is_cyclic(const FractionalIdeal& I, const SearchConfig& cfg = {});
std::vector<std::pair<long, long>> unit_stabilizer(const FractionalIdeal& I, const SearchConfig& cfg = {});

// Clears denominators by a common left factor and applies s to every generator.
FractionalIdeal apply_to_ideal(const TorusAutomorphism& s, const FractionalIdeal& I);

enum class Orientation { forward, inverse };
std::string to_string(Orientation o);

struct EquivarianceStep {
  std::string action;  // letter name or "scaling"
  Side side;
  std::optional<Orientation> orientation;
  std::optional<UnitWitness> unit;
  MemberBounds bounds_used;
};

struct EquivarianceReport {
  bool ok = false;
  std::optional<Orientation> orientation;
  std::optional<UnitWitness> unit;
  MemberBounds bounds_used;
  std::vector<EquivarianceStep> steps;
};

// Compares omega(w p) with the twist of omega(p) by the automorphism of w, one generator
// at a time along the orbit. Letters g1^+-1 are compared on the y side, which they preserve;
// g2^+-1 and scalings on the x side.
EquivarianceReport equivariance_check(const CMPoint& p, const GroupWord& w, const SearchConfig& cfg = {});

bool stabilizer_in_pic(const CMPoint& p, const GroupWord& w);

}  // namespace aq
