#include "aq/matrix.hpp"

namespace aq {

CharPolyAdj char_poly_adjugate(const MatQ& m, VarSign sign) {
  if (m.rows() != m.cols()) throw NonSquare("char_poly_adjugate of a non-square matrix");
  const Eigen::Index n = m.rows();
  const auto un = static_cast<size_t>(n);

  // Faddeev-LeVerrier: det(t - M) = sum_k c_k t^(n-k), adj(t - M) = sum_{k>=1} N_k t^(n-k).
  std::vector<Rational> c(un + 1);
  std::vector<MatQ> nk(un + 1);
  c[0] = Rational(1);
  for (size_t k = 1; k <= un; ++k) {
    nk[k] = (k == 1) ? identity<Rational>(n) : MatQ(mul(m, nk[k - 1]) + c[k - 1] * identity<Rational>(n));
    c[k] = -trace<Rational>(mul(m, nk[k])) / Rational(static_cast<long>(k));
  }

  // det(M - t) = (-1)^n det(t - M), adj(M - t) = (-1)^(n-1) adj(t - M).
  std::vector<Rational> dc(un + 1);
  for (size_t k = 0; k <= un; ++k) dc[un - k] = c[k];
  const Rational det_sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  const Rational adj_sign = -det_sign;
  std::vector<MatQ> adj(un == 0 ? 1 : un, zeros<Rational>(n, n));
  for (size_t k = 1; k <= un; ++k) adj[un - k] = adj_sign * nk[k];
  for (auto& v : dc) v *= det_sign;

  if (sign == VarSign::plus) {
    // substitute t -> -t
    for (size_t k = 1; k < dc.size(); k += 2) dc[k] = -dc[k];
    for (size_t k = 1; k < adj.size(); k += 2) adj[k] = -adj[k];
  }
  CharPolyAdj out{Poly(dc), adj};

  // (M + s t) * sum_m A_m t^m = det * 1, coefficientwise, with s = -1 for minus.
  const Rational s = sign == VarSign::minus ? Rational(-1) : Rational(1);
  for (size_t deg = 0; deg <= un; ++deg) {
    MatQ lhs = zeros<Rational>(n, n);
    if (deg < out.adj.size()) lhs += mul(m, out.adj[deg]);
    if (deg >= 1 && deg - 1 < out.adj.size()) lhs += s * out.adj[deg - 1];
    if (lhs != out.det.coeff(static_cast<int>(deg)) * identity<Rational>(n)) {
      throw ValidationFailed("adjugate identity failed");
    }
  }
  return out;
}

MatF eval_matrix_poly(const std::vector<MatQ>& c, const RatFunc& s) {
  if (c.empty()) return MatF();
  const Eigen::Index r = c.front().rows(), k = c.front().cols();
  MatF acc = zeros<RatFunc>(r, k);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    MatF next = zeros<RatFunc>(r, k);
    for (Eigen::Index a = 0; a < r; ++a)
      for (Eigen::Index b = 0; b < k; ++b) next(a, b) = acc(a, b) * s + RatFunc((*it)(a, b));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace aq
