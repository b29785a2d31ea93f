#pragma once

#include <optional>
#include <utility>

#include "aq/cm.hpp"
#include "aq/torus.hpp"

namespace aq {

struct QReduced {
  Rational canonical;
  long k = 0;  // alpha = q^k * canonical
};

// Canonical representative of alpha modulo q^Z: the valuation at the smallest prime p
// dividing q's numerator or denominator is brought into [0, |v_p(q)|).
QReduced pic_normalize(const Rational& q, const Rational& alpha);

// (alpha, beta; m) with a word witness for m; equality ignores the witness.
struct PicElement {
  Rational alpha{1};
  Rational beta{1};
  Mat2 m{};
  GroupWord word{};

  friend bool operator==(const PicElement& a, const PicElement& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.m == b.m;
  }
};

PicElement make_pic(const Rational& q, const Rational& alpha, const Rational& beta, const Mat2& m);

// g . (alpha, beta) = (alpha^a beta^b, alpha^c beta^d)
std::pair<Rational, Rational> act_on_scalars(const Mat2& g, const Rational& alpha, const Rational& beta);

PicElement pic_mul(const Rational& q, const PicElement& p1, const PicElement& p2);
PicElement pic_inverse(const Rational& q, const PicElement& p);

// Word in g1^{+-1}, g2^{+-1} whose matrix product equals m (throws BadDeterminant unless det m = 1).
GroupWord word_from_matrix(const Mat2& m);

TorusAutomorphism letter_automorphism(const Rational& q, Letter l);

// sigma_{w_k} o ... o sigma_{w_1} o (x -> alpha x, y -> beta y) along the word witness.
TorusAutomorphism pic_to_automorphism(const Rational& q, const PicElement& p);

PicElement omega_of_automorphism(const Rational& q, const TorusAutomorphism& s);

// (n, m) with s = (q^n x, q^m y) when s is inner.
std::optional<std::pair<long, long>> is_inner(const Rational& q, const TorusAutomorphism& s);

}  // namespace aq
