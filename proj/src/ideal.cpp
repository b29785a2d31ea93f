#include "aq/ideal.hpp"

#include <algorithm>
#include <random>

#include "aq/errors.hpp"

namespace aq {

namespace {

Rational scalar(const MatQ& m) { return m.size() == 0 ? Rational(0) : m(0, 0); }

// sum_l w_l (c x)^l
Poly weighted(const std::vector<Rational>& w, const Rational& c) {
  std::vector<Rational> out;
  Rational p(1);
  for (const auto& v : w) {
    out.push_back(v * p);
    p *= c;
  }
  return Poly(out);
}

Poly strip_x(const Poly& p) {
  if (p.is_zero()) return p;
  const int k = p.low_order();
  std::vector<Rational> c(p.coeffs().begin() + k, p.coeffs().end());
  return Poly(c).monic();
}

RatFunc lead_class(const RatFunc& f) { return RatFunc(strip_x(f.num()), strip_x(f.den())); }

RatFunc class_gcd(const RatFunc& a, const RatFunc& b) {
  return RatFunc(poly_gcd(a.num(), b.num()), poly_lcm(a.den(), b.den()));
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [quo, rem] = divmod(a, b);
  if (!rem.is_zero()) throw ValidationFailed("inexact polynomial division");
  return quo;
}

struct Bezout {
  Poly a, b, g;
};

// a A + b B = g with g the monic gcd.
Bezout ext_gcd(const Poly& A, const Poly& B) {
  Poly r0 = A, r1 = B, s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quo * s1);
    t0 = std::exchange(t1, t0 - quo * t1);
  }
  Rational c = r0.lead().inverse();
  return {c * s0, c * t0, c * r0};
}

SkewLaurent y_power(const Rational& q, long d) { return SkewLaurent(Side::x_left, q, RatFunc(1), d); }

SkewLaurent right_factor(const Rational& q, const Poly& r) { return SkewLaurent(Side::x_left, q, RatFunc(r), 0); }

RatFunc lead_of(const SkewLaurent& u) { return u.coeffs().rbegin()->second; }

FractionalIdeal swap_ideal(const FractionalIdeal& I) {
  FractionalIdeal out{I.side == Side::x_left ? Side::y_left : Side::x_left, I.q.inverse(), {}};
  for (const auto& g : I.gens) out.gens.push_back(swap_side(g));
  return out;
}

void require_x_left(const FractionalIdeal& I) {
  if (I.side != Side::x_left) throw SideMismatch("operation requires an x_left ideal");
}

void require_compatible(const FractionalIdeal& a, const FractionalIdeal& b) {
  if (a.side != b.side) throw SideMismatch("ideals on different sides");
  if (a.q != b.q) throw ContextMismatch("ideals over different q");
}

TorusElement random_torus(std::mt19937_64& rng, const Rational& q) {
  std::uniform_int_distribution<long> e(-2, 2), c(-5, 5), t(1, 3);
  TorusElement u(q);
  for (long n = t(rng); n > 0; --n) {
    long v = c(rng);
    u.add_term(Rational(v == 0 ? 1 : v), e(rng), e(rng));
  }
  if (u.is_zero()) u.add_term(Rational(1), 0, 0);
  return u;
}

MemberBounds widest(MemberBounds a, MemberBounds b) {
  return {std::max(a.x_span, b.x_span), std::max(a.y_span, b.y_span)};
}

}  // namespace

FractionalIdeal FractionalIdeal::unit(Side side, const Rational& q) {
  return {side, q, {SkewLaurent(side, q, RatFunc(1), 0)}};
}

FractionalIdeal omega_x(const CMPoint& p) {
  const Rational& q = p.q;
  FractionalIdeal I{Side::x_left, q, {}};
  if (p.n() == 0) {
    I.gens = {SkewLaurent(Side::x_left, q, RatFunc(1), 0), SkewLaurent(Side::x_left, q, RatFunc(1), 0)};
    return I;
  }
  auto cx = char_poly_adjugate(p.X);
  auto cy = char_poly_adjugate(p.Y);
  I.gens.emplace_back(Side::x_left, q, RatFunc(cx.det), 0);
  // (X - qx)^-1 = adj(X - qx) / det(X - qx)
  const Poly den = cx.det.scale_arg(q);
  SkewLaurent g2(Side::x_left, q);
  for (long m = 0; m <= p.n(); ++m) {
    g2.add(m, RatFunc(cy.det.coeff(static_cast<int>(m))));
    if (m >= static_cast<long>(cy.adj.size())) continue;
    std::vector<Rational> w;
    for (const auto& A : cx.adj) w.push_back(scalar(mul(p.j, A, cy.adj[static_cast<size_t>(m)], p.i)));
    g2.add(m, -RatFunc(weighted(w, q), den));
  }
  I.gens.push_back(g2);
  return I;
}

FractionalIdeal omega_y(const CMPoint& p) {
  const Rational& q = p.q;
  FractionalIdeal I{Side::y_left, q, {}};
  if (p.n() == 0) {
    I.gens = {SkewLaurent(Side::y_left, q, RatFunc(1), 0), SkewLaurent(Side::y_left, q, RatFunc(1), 0)};
    return I;
  }
  auto cx = char_poly_adjugate(p.X);
  auto cy = char_poly_adjugate(p.Y);
  auto cqy = char_poly_adjugate(MatQ(p.Y * q));
  I.gens.emplace_back(Side::y_left, q, RatFunc(cy.det), 0);
  SkewLaurent g2(Side::y_left, q);
  for (long m = 0; m <= p.n(); ++m) {
    g2.add(m, RatFunc(cx.det.coeff(static_cast<int>(m))));
    if (m >= static_cast<long>(cx.adj.size())) continue;
    std::vector<Rational> w;
    for (const auto& B : cqy.adj) w.push_back(scalar(mul(p.j, B, cx.adj[static_cast<size_t>(m)], p.i)));
    g2.add(m, RatFunc(Poly(w), cqy.det));
  }
  I.gens.push_back(g2);
  return I;
}

Rational kappa_coefficient(const CMPoint& p, long s, long r) {
  if (p.n() == 0) return Rational(0);
  MatQ v = p.i;
  for (long t = 0; t < r; ++t) v = mul(p.X, v);
  for (long t = 0; t < s; ++t) v = mul(p.Y, v);
  return p.q.pow(s) * scalar(mul(p.j, v));
}

KappaData kappa_series(const CMPoint& p, int depth) {
  if (depth < 0) throw InvalidParameter("series depth must be nonnegative");
  const Rational& q = p.q;
  KappaData out{p, depth, {}, SkewSeries::one(Side::x_left, q, depth), SkewSeries::one(Side::x_left, q, depth)};
  out.a.assign(static_cast<size_t>(depth) + 1, std::vector<Rational>(static_cast<size_t>(depth) + 1));
  const long n = p.n();
  std::vector<MatQ> ys;  // Y^s i
  std::vector<MatQ> jys;  // j Y^s
  if (n > 0) {
    MatQ col = p.i, row = p.j;
    std::vector<MatQ> xs;  // X^r i
    for (int s = 0; s <= depth; ++s) {
      ys.push_back(col);
      jys.push_back(row);
      xs.push_back(s == 0 ? p.i : mul(p.X, xs.back()));
      col = mul(p.Y, col);
      row = mul(row, p.Y);
    }
    for (int s = 0; s <= depth; ++s)
      for (int r = 0; r <= depth; ++r)
        out.a[static_cast<size_t>(s)][static_cast<size_t>(r)] =
            q.pow(s) * scalar(mul(jys[static_cast<size_t>(s)], xs[static_cast<size_t>(r)]));
  }
  if (n == 0) return out;
  auto cx = char_poly_adjugate(p.X);
  for (int s = 0; s < depth; ++s) {
    // (z - X)^-1 = -adj(X - z) / det(X - z) at z = q^(s+1) x
    const Rational z = q.pow(s + 1);
    std::vector<Rational> wc, wd;
    for (const auto& A : cx.adj) {
      wc.push_back(scalar(mul(jys[static_cast<size_t>(s)], A, p.i)));
      wd.push_back(scalar(mul(p.j, A, ys[static_cast<size_t>(s)])));
    }
    RatFunc c = RatFunc(weighted(wc, z), cx.det.scale_arg(z)) * RatFunc(-q.pow(s));
    RatFunc d(weighted(wd, q), cx.det.scale_arg(q));
    out.kappa.set(-s - 1, c);
    out.kappa_inv.set(-s - 1, d);
  }
  return out;
}

std::vector<Rational> cayley_hamilton_coeffs(const MatQ& X) {
  if (X.rows() != X.cols()) throw NonSquare("cayley_hamilton_coeffs needs a square matrix");
  const long n = X.rows();
  // det(t - X) = (-1)^n det(X - t)
  Poly P = char_poly_adjugate(X).det;
  if (n % 2 == 1) P = -P;
  if (P.coeff(0).is_zero()) throw Singular("X is not invertible");
  std::vector<Rational> c;
  for (long k = 1; k <= n; ++k) c.push_back(-P.coeff(static_cast<int>(k)) / P.coeff(0));
  return c;
}

LeadIdeal leading_ideal(const FractionalIdeal& I, const SearchConfig& cfg) {
  require_x_left(I);
  const Rational& q = I.q;
  LeadIdeal out;
  for (const auto& g : I.gens)
    if (!g.is_zero()) out.elements.push_back(g);
  if (out.elements.empty()) throw ZeroElement("ideal has no nonzero generator");
  RatFunc P = lead_class(lead_of(out.elements.front()));
  for (const auto& g : out.elements) P = class_gcd(P, lead_class(lead_of(g)));
  auto realized = [&] {
    return std::any_of(out.elements.begin(), out.elements.end(),
                       [&](const SkewLaurent& g) { return lead_class(lead_of(g)) == P; });
  };
  const size_t max_elements = 12;
  const int rounds = std::max(1, cfg.membership.y_span);
  for (int round = 0;; ++round) {
    if (P == RatFunc(1) && realized()) break;
    bool changed = false;
    std::vector<SkewLaurent> fresh;
    const size_t count = out.elements.size();
    for (size_t a = 0; a < count; ++a)
      for (size_t b = a + 1; b < count; ++b) {
        const auto& u = out.elements[a];
        const auto& v = out.elements[b];
        const long T = std::max(u.top(), v.top());
        SkewLaurent us = u * y_power(q, T - u.top());
        SkewLaurent vs = v * y_power(q, T - v.top());
        const RatFunc lu = lead_of(us), lv = lead_of(vs);
        const Rational lift = q.pow(T);  // r(q^-T x) = R(x)
        // Cancel the tops.
        Poly G = poly_gcd(lu.num() * lv.den(), lv.num() * lu.den());
        Poly Ru = exact_div(lv.num() * lu.den(), G), Rv = exact_div(lu.num() * lv.den(), G);
        SkewLaurent h = us * right_factor(q, Ru.scale_arg(lift)) - vs * right_factor(q, Rv.scale_arg(lift));
        if (!h.is_zero()) {
          RatFunc P2 = class_gcd(P, lead_class(lead_of(h)));
          if (P2 != P) {
            P = P2;
            changed = true;
            fresh.push_back(h);
          }
        }
        // Realize the pairwise gcd of the leads by one element.
        Poly L = poly_lcm(lu.den(), lv.den());
        Poly A = lu.num() * exact_div(L, lu.den()), B = lv.num() * exact_div(L, lv.den());
        Bezout bz = ext_gcd(A, B);
        if (bz.g.degree() < std::min(A.degree(), B.degree())) {
          SkewLaurent hb = us * right_factor(q, bz.a.scale_arg(lift)) + vs * right_factor(q, bz.b.scale_arg(lift));
          if (!hb.is_zero()) fresh.push_back(hb);
        }
      }
    for (auto& h : fresh)
      if (out.elements.size() < max_elements &&
          std::find(out.elements.begin(), out.elements.end(), h) == out.elements.end())
        out.elements.push_back(std::move(h));
    if (!changed && (realized() || fresh.empty())) break;
    if (round + 1 >= rounds) {
      if (changed) throw SaturationBoundExceeded("leading-coefficient ideal did not stabilize within the bound");
      break;
    }
  }
  out.generator = P;
  return out;
}

ConditionReport check_conditions(const FractionalIdeal& I, int samples, unsigned long seed,
                                 const SearchConfig& cfg) {
  require_x_left(I);
  ConditionReport rep;
  rep.samples = samples;
  for (const auto& g : I.gens)
    if (!g.is_zero() && g.top() == g.bottom()) rep.meets_laurent = true;
  auto lead = leading_ideal(I, cfg);
  for (const auto& e : lead.elements)
    if (lead_of(e).is_unit_monomial()) rep.unit_lead = true;
  std::mt19937_64 rng(seed);
  rep.laurent_leads = true;
  for (int t = 0; t < samples; ++t) {
    SkewLaurent h(Side::x_left, I.q);
    for (const auto& g : I.gens) h += g * embed(random_torus(rng, I.q), Side::x_left);
    if (!h.is_zero() && !lead_of(h).is_laurent()) rep.laurent_leads = false;
  }
  return rep;
}

FractionalIdeal normalize_ideal(const FractionalIdeal& I, const SearchConfig& cfg) {
  require_x_left(I);
  auto lead = leading_ideal(I, cfg);
  const RatFunc inv = lead.generator.inverse();
  FractionalIdeal out{I.side, I.q, {}};
  for (const auto& g : I.gens)
    if (!g.is_zero()) out.gens.push_back(g.left_mul(inv));
  bool unit = false;
  for (const auto& e : lead.elements)
    if (lead_of(e.left_mul(inv)).is_unit_monomial()) unit = true;
  if (!unit) throw SaturationBoundExceeded("no element with a unit leading coefficient was found");
  auto rep = check_conditions(out, 8, cfg.seed, cfg);
  if (!rep.laurent_leads) throw SaturationBoundExceeded("normalized ideal has a non-Laurent leading coefficient");
  return out;
}

FractionalIdeal unit_translate(const FractionalIdeal& I, long m, long k) {
  require_x_left(I);
  FractionalIdeal out{I.side, I.q, {}};
  const Rational s = I.q.pow(-k);
  for (const auto& g : I.gens) {
    SkewLaurent h(Side::x_left, I.q);
    for (const auto& [d, f] : g.coeffs()) h.add(d, f.scale_arg(s) * RatFunc(I.q.pow(m * d)));
    out.gens.push_back(h);
  }
  return out;
}

bool ideals_equal(const FractionalIdeal& I1, const FractionalIdeal& I2, const SearchConfig& cfg, MemberBounds* used) {
  require_compatible(I1, I2);
  MemberBounds u{0, 0};
  auto contained = [&](const FractionalIdeal& a, const FractionalIdeal& b) {
    for (const auto& g : a.gens) {
      auto r = ideal_member_escalating(g, b.gens, cfg.membership, cfg.escalation_steps);
      if (!r.witness) return false;
      u = widest(u, r.used);
    }
    return true;
  };
  bool eq = contained(I1, I2) && contained(I2, I1);
  if (eq && used) *used = u;
  return eq;
}

namespace {

std::vector<std::pair<long, long>> unit_candidates(int bound) {
  std::vector<std::pair<long, long>> c;
  for (long m = -bound; m <= bound; ++m)
    for (long k = -bound; k <= bound; ++k) c.emplace_back(m, k);
  std::stable_sort(c.begin(), c.end(), [](auto a, auto b) {
    return std::abs(a.first) + std::abs(a.second) < std::abs(b.first) + std::abs(b.second);
  });
  return c;
}

}  // namespace

IsoResult ideal_isomorphic(const FractionalIdeal& I1, const FractionalIdeal& I2, const SearchConfig& cfg) {
  require_compatible(I1, I2);
  if (I1.side == Side::y_left) {
    // x^m y^k over 1/q is y^m x^k over q, a scalar multiple of x^k y^m.
    auto r = ideal_isomorphic(swap_ideal(I1), swap_ideal(I2), cfg);
    if (r.unit) r.unit = UnitWitness{Rational(1), r.unit->k, r.unit->m};
    return r;
  }
  const FractionalIdeal N1 = normalize_ideal(I1, cfg), N2 = normalize_ideal(I2, cfg);
  for (auto [m, k] : unit_candidates(cfg.unit_bound)) {
    MemberBounds used;
    if (ideals_equal(unit_translate(N1, m, k), N2, cfg, &used)) return {UnitWitness{Rational(1), m, k}, used};
  }
  return {std::nullopt, cfg.membership};
}

IsoResult is_cyclic(const FractionalIdeal& I, const SearchConfig& cfg) {
  return ideal_isomorphic(FractionalIdeal::unit(I.side, I.q), I, cfg);
}

std::vector<std::pair<long, long>> unit_stabilizer(const FractionalIdeal& I, const SearchConfig& cfg) {
  if (I.side == Side::y_left) {
    auto r = unit_stabilizer(swap_ideal(I), cfg);
    for (auto& [m, k] : r) std::swap(m, k);
    std::sort(r.begin(), r.end());
    return r;
  }
  const FractionalIdeal N = normalize_ideal(I, cfg);
  std::vector<std::pair<long, long>> out;
  for (auto [m, k] : unit_candidates(cfg.unit_bound))
    if (ideals_equal(unit_translate(N, m, k), N, cfg)) out.emplace_back(m, k);
  std::sort(out.begin(), out.end());
  return out;
}

FractionalIdeal apply_to_ideal(const TorusAutomorphism& s, const FractionalIdeal& I) {
  Poly h(Rational(1));
  for (const auto& g : I.gens) h = poly_lcm(h, g.common_denominator());
  FractionalIdeal out{I.side, I.q, {}};
  for (const auto& g : I.gens) out.gens.push_back(embed(apply_automorphism(s, to_torus(g.left_mul(RatFunc(h)))), I.side));
  return out;
}

std::string to_string(Orientation o) { return o == Orientation::forward ? "forward" : "inverse"; }

namespace {

FractionalIdeal omega_on(Side side, const CMPoint& p) { return side == Side::x_left ? omega_x(p) : omega_y(p); }

EquivarianceStep check_step(const std::string& name, const TorusAutomorphism& s, Side side, const CMPoint& from,
                            const CMPoint& to, const SearchConfig& cfg) {
  EquivarianceStep step{name, side, std::nullopt, std::nullopt, cfg.membership};
  const FractionalIdeal I = omega_on(side, from), J = omega_on(side, to);
  for (Orientation o : {Orientation::forward, Orientation::inverse}) {
    const TorusAutomorphism t = o == Orientation::forward ? s : inverse_automorphism(from.q, s);
    auto r = ideal_isomorphic(apply_to_ideal(t, I), J, cfg);
    if (r.unit) {
      step.orientation = o;
      step.unit = r.unit;
      step.bounds_used = r.bounds_used;
      return step;
    }
  }
  return step;
}

}  // namespace

EquivarianceReport equivariance_check(const CMPoint& p, const GroupWord& w, const SearchConfig& cfg) {
  EquivarianceReport rep;
  CMPoint cur = p;
  if (!w.alpha.is_one() || !w.beta.is_one()) {
    CMPoint next = cm_act(GroupWord::scaling(w.alpha, w.beta), cur);
    rep.steps.push_back(
        check_step("scaling", TorusAutomorphism::scaling(w.alpha, w.beta), Side::x_left, cur, next, cfg));
    cur = next;
  }
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    CMPoint next = cm_act(*it, cur);
    Side side = (*it == Letter::g1 || *it == Letter::g1inv) ? Side::y_left : Side::x_left;
    rep.steps.push_back(check_step(to_string(*it), letter_automorphism(p.q, *it), side, cur, next, cfg));
    cur = next;
  }
  rep.ok = true;
  rep.bounds_used = {0, 0};
  for (const auto& st : rep.steps) {
    if (!st.orientation || (rep.orientation && *rep.orientation != *st.orientation)) rep.ok = false;
    if (st.orientation && !rep.orientation) rep.orientation = st.orientation;
    if (st.unit && !rep.unit) rep.unit = st.unit;
    rep.bounds_used = widest(rep.bounds_used, st.bounds_used);
  }
  if (rep.steps.empty()) {
    rep.orientation = Orientation::forward;
    rep.unit = UnitWitness{};
  }
  return rep;
}

bool stabilizer_in_pic(const CMPoint& p, const GroupWord& w) { return cm_equivalent(cm_act(w, p), p).has_value(); }

}  // namespace aq
