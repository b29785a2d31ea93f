#include "aq/skew.hpp"

#include <sstream>

#include "aq/errors.hpp"
#include "aq/sparse.hpp"

namespace aq {

std::string to_string(Side s) { return s == Side::x_left ? "x_left" : "y_left"; }

SkewLaurent::SkewLaurent(Side side, Rational q, const RatFunc& f, long deg) : side_(side), q_(std::move(q)) {
  add(deg, f);
}

RatFunc SkewLaurent::coeff(long deg) const {
  auto it = c_.find(deg);
  return it == c_.end() ? RatFunc() : it->second;
}

void SkewLaurent::add(long deg, const RatFunc& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(deg, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) c_.erase(it);
}

long SkewLaurent::top() const {
  if (c_.empty()) throw ZeroElement("degree of zero element");
  return c_.rbegin()->first;
}

long SkewLaurent::bottom() const {
  if (c_.empty()) throw ZeroElement("degree of zero element");
  return c_.begin()->first;
}

SkewLaurent SkewLaurent::left_mul(const RatFunc& h) const {
  SkewLaurent out(side_, q_);
  for (const auto& [d, f] : c_) out.add(d, h * f);
  return out;
}

Poly SkewLaurent::common_denominator() const {
  Poly l(Rational(1));
  for (const auto& [d, f] : c_) l = poly_lcm(l, f.den());
  return l;
}

void SkewLaurent::require_same(const SkewLaurent& o) const {
  if (side_ != o.side_) throw SideMismatch("skew elements on different sides");
  if (q_ != o.q_) throw ContextMismatch("skew elements over different q");
}

SkewLaurent& SkewLaurent::operator+=(const SkewLaurent& o) {
  require_same(o);
  for (const auto& [d, f] : o.c_) add(d, f);
  return *this;
}

SkewLaurent& SkewLaurent::operator-=(const SkewLaurent& o) {
  require_same(o);
  for (const auto& [d, f] : o.c_) add(d, -f);
  return *this;
}

SkewLaurent operator*(const SkewLaurent& u, const SkewLaurent& v) {
  u.require_same(v);
  SkewLaurent out(u.side_, u.q_);
  const Rational s = u.shift();
  for (const auto& [i, f] : u.c_) {
    const Rational si = s.pow(i);
    for (const auto& [j, g] : v.c_) out.add(i + j, f * g.scale_arg(si));
  }
  return out;
}

std::string SkewLaurent::str() const {
  if (c_.empty()) return "0";
  const char* left = side_ == Side::x_left ? "x" : "y";
  const char* right = side_ == Side::x_left ? "y" : "x";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str(left) << ")";
    if (it->first != 0) os << "*" << right << "^" << it->first;
  }
  return os.str();
}

SkewLaurent embed(const TorusElement& u, Side side) {
  SkewLaurent out(side, u.q());
  for (const auto& [k, c] : u.terms()) {
    auto [a, b] = k;
    if (side == Side::x_left) out.add(b, RatFunc::monomial(c, static_cast<int>(a)));
    else out.add(a, RatFunc::monomial(c * u.q().pow(a * b), static_cast<int>(b)));
  }
  return out;
}

TorusElement to_torus(const SkewLaurent& u) {
  TorusElement out(u.q());
  for (const auto& [d, f] : u.coeffs()) {
    if (!f.is_laurent()) throw InvalidParameter("coefficient is not a Laurent polynomial: " + f.str());
    const int shift = f.den().degree();
    for (int k = 0; k <= f.num().degree(); ++k) {
      const Rational& c = f.num().coeffs()[static_cast<size_t>(k)];
      if (c.is_zero()) continue;
      long e = k - shift;
      if (u.side() == Side::x_left) out.add_term(c, e, d);
      else out.add_term(c * u.q().pow(-d * e), d, e);  // y^e x^d = q^(-de) x^d y^e
    }
  }
  return out;
}

SkewLaurent swap_side(const SkewLaurent& u) {
  SkewLaurent out(u.side() == Side::x_left ? Side::y_left : Side::x_left, u.q().inverse());
  for (const auto& [d, f] : u.coeffs()) out.add(d, f);
  return out;
}

LeadingData degree_and_leading(const SkewLaurent& u) {
  if (u.is_zero()) throw ZeroElement("leading data of zero element");
  return {u.top() - u.bottom(), u.coeffs().rbegin()->second, u.top()};
}

SkewSeries::SkewSeries(Side side, Rational q, long top, int depth)
    : side_(side), q_(std::move(q)), top_(top), depth_(depth), c_(static_cast<size_t>(depth) + 1) {
  if (depth < 0) throw InvalidParameter("series depth must be nonnegative");
}

SkewSeries SkewSeries::from_laurent(const SkewLaurent& u, int depth) {
  long top = u.is_zero() ? 0 : u.top();
  SkewSeries s(u.side(), u.q(), top, depth);
  for (const auto& [d, f] : u.coeffs())
    if (top - d <= depth) s.c_[static_cast<size_t>(top - d)] = f;
  return s;
}

SkewSeries SkewSeries::one(Side side, const Rational& q, int depth) {
  SkewSeries s(side, q, 0, depth);
  s.c_[0] = RatFunc(1);
  return s;
}

RatFunc SkewSeries::at(long deg) const {
  if (deg > top_) return RatFunc();
  if (deg < top_ - depth_) throw InvalidParameter("coefficient below the series truncation");
  return c_[static_cast<size_t>(top_ - deg)];
}

void SkewSeries::set(long deg, RatFunc f) {
  if (deg > top_ || deg < top_ - depth_) throw InvalidParameter("degree outside the series window");
  c_[static_cast<size_t>(top_ - deg)] = std::move(f);
}

bool SkewSeries::is_zero() const {
  for (const auto& f : c_)
    if (!f.is_zero()) return false;
  return true;
}

bool SkewSeries::agrees_with(const SkewSeries& o) const {
  if (side_ != o.side_ || q_ != o.q_) return false;
  long lo = std::max(top_ - depth_, o.top_ - o.depth_);
  for (long d = std::max(top_, o.top_); d >= lo; --d)
    if (at(d) != o.at(d)) return false;
  return true;
}

std::string SkewSeries::str() const {
  std::ostringstream os;
  const char* right = side_ == Side::x_left ? "y" : "x";
  const char* left = side_ == Side::x_left ? "x" : "y";
  bool first = true;
  for (int k = 0; k <= depth_; ++k) {
    const auto& f = c_[static_cast<size_t>(k)];
    if (f.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str(left) << ")*" << right << "^" << (top_ - k);
  }
  if (first) os << "0";
  os << " + O(" << right << "^" << (top_ - depth_ - 1) << ")";
  return os.str();
}

SkewSeries series_mul(const SkewSeries& u, const SkewSeries& v) {
  if (u.side() != v.side()) throw SideMismatch("series on different sides");
  if (u.q() != v.q()) throw ContextMismatch("series over different q");
  const int depth = std::min(u.depth(), v.depth());
  SkewSeries out(u.side(), u.q(), u.top() + v.top(), depth);
  const Rational s = u.side() == Side::x_left ? u.q().inverse() : u.q();
  for (int k = 0; k <= depth; ++k) {
    RatFunc acc;
    for (int i = 0; i <= k; ++i) {
      const RatFunc& f = u.coeffs()[static_cast<size_t>(i)];
      if (f.is_zero()) continue;
      acc += f * v.coeffs()[static_cast<size_t>(k - i)].scale_arg(s.pow(u.top() - i));
    }
    out.set(out.top() - k, acc);
  }
  return out;
}

SkewSeries series_invert(const SkewSeries& u) {
  const RatFunc& lead = u.coeffs().front();
  if (lead.is_zero()) throw NonInvertibleLead("series with zero leading coefficient");
  const long t = u.top();
  const Rational s = u.side() == Side::x_left ? u.q().inverse() : u.q();
  SkewSeries h(u.side(), u.q(), -t, u.depth());
  std::vector<RatFunc> hc(static_cast<size_t>(u.depth()) + 1);
  // coefficient of v^(-k) in u*h: f_t(x) h_k(s^t x) + sum_{i>=1} u_i(x) h_{k-i}(s^(t-i) x)
  for (int k = 0; k <= u.depth(); ++k) {
    RatFunc r = k == 0 ? RatFunc(1) : RatFunc();
    for (int i = 1; i <= k; ++i) {
      const RatFunc& f = u.coeffs()[static_cast<size_t>(i)];
      if (f.is_zero()) continue;
      r -= f * hc[static_cast<size_t>(k - i)].scale_arg(s.pow(t - i));
    }
    hc[static_cast<size_t>(k)] = (r / lead).scale_arg(s.pow(-t));
    h.set(-t - k, hc[static_cast<size_t>(k)]);
  }
  return h;
}

namespace {

std::optional<std::vector<TorusElement>> member_x_left(const SkewLaurent& f,
                                                       const std::vector<SkewLaurent>& gens,
                                                       MemberBounds bounds) {
  const Rational& q = f.q();
  Poly l = f.common_denominator();
  for (const auto& g : gens) l = poly_lcm(l, g.common_denominator());

  // Row key (-slice, x-power) so that rows arrive from the top slice downward.
  using Key = std::pair<long, long>;
  struct Cell {
    size_t k;
    long a, b;
  };
  std::map<Key, std::vector<std::pair<size_t, Rational>>> rows;
  std::map<Key, Rational> rhs;
  std::vector<Cell> cells;

  for (const auto& [e, fe] : f.coeffs()) {
    Poly p = divmod(fe.num() * l, fe.den()).first;
    for (int d = 0; d <= p.degree(); ++d)
      if (!p.coeffs()[static_cast<size_t>(d)].is_zero()) rhs[{-e, d}] = p.coeffs()[static_cast<size_t>(d)];
  }
  for (size_t k = 0; k < gens.size(); ++k) {
    std::vector<std::pair<long, Poly>> cleared;
    for (const auto& [i, gi] : gens[k].coeffs()) cleared.emplace_back(i, divmod(gi.num() * l, gi.den()).first);
    for (long b = -bounds.y_span; b <= bounds.y_span; ++b)
      for (long a = -bounds.x_span; a <= bounds.x_span; ++a) {
        size_t col = cells.size();
        cells.push_back({k, a, b});
        // G_k x^a y^b = sum_i q^(-ia) x^a g_ki(x) y^(i+b)
        for (const auto& [i, p] : cleared) {
          Rational scale = q.pow(-i * a);
          for (int d = 0; d <= p.degree(); ++d) {
            const Rational& c = p.coeffs()[static_cast<size_t>(d)];
            if (c.is_zero()) continue;
            rows[{-(i + b), a + d}].emplace_back(col, scale * c);
          }
        }
      }
  }
  for (const auto& [key, v] : rhs)
    if (!rows.count(key)) return std::nullopt;

  // Columns are renumbered in order of first appearance, which keeps the system banded.
  std::vector<long> order(cells.size(), -1);
  size_t next = 0;
  SparseEchelon sys(cells.size());
  for (auto& [key, entries] : rows) {
    for (auto& [col, c] : entries) {
      if (order[col] < 0) order[col] = static_cast<long>(next++);
      col = static_cast<size_t>(order[col]);
    }
    auto it = rhs.find(key);
    if (!sys.add_row(std::move(entries), it == rhs.end() ? Rational(0) : it->second)) return std::nullopt;
  }
  std::vector<Rational> sol = sys.solve();

  std::vector<TorusElement> witness(gens.size(), TorusElement(q));
  for (size_t col = 0; col < cells.size(); ++col) {
    if (order[col] < 0) continue;
    const Rational& c = sol[static_cast<size_t>(order[col])];
    if (!c.is_zero()) witness[cells[col].k].add_term(c, cells[col].a, cells[col].b);
  }
  SkewLaurent check(Side::x_left, q);
  for (size_t k = 0; k < gens.size(); ++k) check += gens[k] * embed(witness[k], Side::x_left);
  if (check != f) throw ValidationFailed("membership witness does not reproduce the target");
  return witness;
}

}  // namespace

std::optional<std::vector<TorusElement>> ideal_member(const SkewLaurent& f,
                                                      const std::vector<SkewLaurent>& gens,
                                                      MemberBounds bounds) {
  if (bounds.x_span < 0 || bounds.y_span < 0) throw InvalidParameter("membership spans must be nonnegative");
  for (const auto& g : gens) {
    if (g.side() != f.side()) throw SideMismatch("membership across sides");
    if (g.q() != f.q()) throw ContextMismatch("membership across q");
  }
  for (size_t k = 0; k < gens.size(); ++k) {
    if (gens[k] != f) continue;
    std::vector<TorusElement> w(gens.size(), TorusElement(f.q()));
    w[k] = TorusElement::constant(f.q(), Rational(1));
    return w;
  }
  if (f.side() == Side::x_left) return member_x_left(f, gens, bounds);

  std::vector<SkewLaurent> sg;
  for (const auto& g : gens) sg.push_back(swap_side(g));
  auto w = member_x_left(swap_side(f), sg, {bounds.y_span, bounds.x_span});
  if (!w) return std::nullopt;
  for (auto& p : *w) p = transport_to_inverse_q(p);
  return w;
}

std::vector<MemberBounds> escalation_schedule(MemberBounds cap, int steps) {
  std::vector<MemberBounds> out;
  for (int s = std::max(steps, 0); s >= 0; --s) {
    const int div = 1 << s;
    MemberBounds b{(cap.x_span + div - 1) / div, (cap.y_span + div - 1) / div};
    if (out.empty() || !(out.back() == b)) out.push_back(b);
  }
  return out;
}

MemberResult ideal_member_escalating(const SkewLaurent& f, const std::vector<SkewLaurent>& gens,
                                     MemberBounds cap, int steps) {
  MemberResult res{std::nullopt, cap};
  for (const auto& b : escalation_schedule(cap, steps)) {
    res.used = b;
    res.witness = ideal_member(f, gens, b);
    if (res.witness) return res;
  }
  return res;
}

}  // namespace aq
