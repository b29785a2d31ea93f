#include "aq/picard.hpp"

#include "aq/errors.hpp"

namespace aq {

namespace {

long floor_div(long a, long b) {
  long d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

void push(std::vector<Letter>& w, Letter pos, long count) {
  Letter l = count >= 0 ? pos : inverse(pos);
  for (long k = 0; k < std::abs(count); ++k) w.push_back(l);
}

}  // namespace

QReduced pic_normalize(const Rational& q, const Rational& alpha) {
  check_parameter(q);
  if (alpha.is_zero()) throw InvalidParameter("pic_normalize of zero");
  const unsigned long p = smallest_prime_factor(q.num() * q.den());
  const long v = q.valuation(p);
  const long w = alpha.valuation(p);
  const long av = std::abs(v);
  const long k = (v > 0 ? 1 : -1) * floor_div(w, av);
  QReduced r{alpha / q.pow(k), k};
  const long rv = r.canonical.valuation(p);
  if (rv < 0 || rv >= av || q.pow(k) * r.canonical != alpha) throw ValidationFailed("pic_normalize check failed");
  return r;
}

PicElement make_pic(const Rational& q, const Rational& alpha, const Rational& beta, const Mat2& m) {
  return {pic_normalize(q, alpha).canonical, pic_normalize(q, beta).canonical, m, word_from_matrix(m)};
}

std::pair<Rational, Rational> act_on_scalars(const Mat2& g, const Rational& alpha, const Rational& beta) {
  return {alpha.pow(g.a) * beta.pow(g.b), alpha.pow(g.c) * beta.pow(g.d)};
}

PicElement pic_mul(const Rational& q, const PicElement& p1, const PicElement& p2) {
  auto [a, b] = act_on_scalars(p1.m, p2.alpha, p2.beta);
  PicElement r{pic_normalize(q, p1.alpha * a).canonical, pic_normalize(q, p1.beta * b).canonical, p1.m * p2.m,
               p1.word};
  r.word.letters.insert(r.word.letters.end(), p2.word.letters.begin(), p2.word.letters.end());
  return r;
}

PicElement pic_inverse(const Rational& q, const PicElement& p) {
  Mat2 gi = p.m.inverse();
  auto [a, b] = act_on_scalars(gi, p.alpha.inverse(), p.beta.inverse());
  PicElement r{pic_normalize(q, a).canonical, pic_normalize(q, b).canonical, gi, {}};
  for (auto it = p.word.letters.rbegin(); it != p.word.letters.rend(); ++it) r.word.letters.push_back(inverse(*it));
  return r;
}

GroupWord word_from_matrix(const Mat2& m) {
  if (m.det() != 1) throw BadDeterminant("matrix must have determinant 1 (got " + std::to_string(m.det()) + ")");
  // m = prefix * cur; left operations on cur append their inverses to the prefix
  std::vector<Letter> prefix;
  Mat2 cur = m;
  auto row1_add = [&](long t) {  // row1 += t row2, i.e. G1^t
    cur = Mat2{1, t, 0, 1} * cur;
    push(prefix, Letter::g1, -t);
  };
  auto row2_sub = [&](long s) {  // row2 -= s row1, i.e. G2^s
    cur = Mat2{1, 0, -s, 1} * cur;
    push(prefix, Letter::g2, -s);
  };
  while (cur.c != 0) {
    long t = floor_div(cur.a, cur.c);
    if (t != 0) row1_add(-t);
    if (cur.a == 0) row1_add(1);
    row2_sub(floor_div(cur.c, cur.a));
  }
  GroupWord w;
  w.letters = prefix;
  if (cur.a == 1) {
    push(w.letters, Letter::g1, cur.b);
  } else {
    // cur = -[[1, -b], [0, 1]] and -1 = (g1 g2)^3
    for (int k = 0; k < 3; ++k) {
      w.letters.push_back(Letter::g1);
      w.letters.push_back(Letter::g2);
    }
    push(w.letters, Letter::g1, -cur.b);
  }
  if (w.matrix() != m) throw ValidationFailed("word decomposition check failed");
  return w;
}

TorusAutomorphism letter_automorphism(const Rational& q, Letter l) {
  switch (l) {
    case Letter::g1: return {Rational(1), Rational(1), kG1};
    case Letter::g2: return {Rational(1), Rational(1), kG2};
    case Letter::g1inv: return inverse_automorphism(q, {Rational(1), Rational(1), kG1});
    case Letter::g2inv: return inverse_automorphism(q, {Rational(1), Rational(1), kG2});
  }
  return {};
}

TorusAutomorphism pic_to_automorphism(const Rational& q, const PicElement& p) {
  TorusAutomorphism s = TorusAutomorphism::scaling(p.alpha, p.beta);
  for (Letter l : p.word.letters) s = compose_automorphisms(q, letter_automorphism(q, l), s);
  if (s.m() != p.m) throw ValidationFailed("word witness does not match the matrix part");
  return s;
}

PicElement omega_of_automorphism(const Rational& q, const TorusAutomorphism& s) {
  return make_pic(q, s.alpha(), s.beta(), s.m());
}

std::optional<std::pair<long, long>> is_inner(const Rational& q, const TorusAutomorphism& s) {
  if (!s.m().is_identity()) return std::nullopt;
  auto a = pic_normalize(q, s.alpha());
  auto b = pic_normalize(q, s.beta());
  if (!a.canonical.is_one() || !b.canonical.is_one()) return std::nullopt;
  return std::make_pair(a.k, b.k);
}

}  // namespace aq
