#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aq/matrix.hpp"
#include "aq/sl2.hpp"

namespace aq {

// Quantum Calogero-Moser data: X, Y invertible n x n, i a column, j a row, with
// qXY - YX + ij = 0 and rk(qXYX^-1Y^-1 - 1) = 1. The n = 0 point has empty matrices.
struct CMPoint {
  Rational q{2};
  MatQ X, Y, i, j;

  long n() const { return X.rows(); }
  friend bool operator==(const CMPoint&, const CMPoint&) = default;
};

CMPoint empty_point(const Rational& q);

struct Validation {
  bool valid = true;
  std::string diagnostic;  // first violated invariant
};

Validation cm_validate(const CMPoint& p);

// Scales i so that its first nonzero entry is 1 and j by the inverse factor.
CMPoint gauge_normalize(CMPoint p);

CMPoint cm_make(const Rational& q, const std::vector<Rational>& x_diag, const MatQ& i, const MatQ& j);

struct IJ {
  MatQ i, j;
};

// Rank-one factorization of YX - qXY in gauge-normal form.
IJ recover_ij(const Rational& q, const MatQ& X, const MatQ& Y);

enum class Letter { g1, g1inv, g2, g2inv };

std::string to_string(Letter l);
Letter parse_letter(const std::string& s);
Letter inverse(Letter l);
Mat2 letter_matrix(Letter l);

struct GroupWord {
  std::vector<Letter> letters;
  Rational alpha{1};
  Rational beta{1};

  static GroupWord scaling(const Rational& a, const Rational& b) { return {{}, a, b}; }
  // Product of the letter matrices, left to right.
  Mat2 matrix() const;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

// Scaling acts first, then the letters from right to left (the leftmost letter acts last).
CMPoint cm_act(const GroupWord& w, const CMPoint& p);
CMPoint cm_act(Letter l, const CMPoint& p);

struct Equivalence {
  MatQ g;  // g X2 = q^k X1 g, g Y2 = q^m Y1 g
  long k = 0;
  long m = 0;
};

std::optional<Equivalence> cm_equivalent(const CMPoint& p1, const CMPoint& p2);

// Exact check of a claimed equivalence.
bool verify_equivalence(const CMPoint& p1, const CMPoint& p2, const Equivalence& e);

// k with r = q^(k * n) if one exists (n >= 1).
std::optional<long> q_power_exponent(const Rational& q, const Rational& r, long n);

}  // namespace aq
