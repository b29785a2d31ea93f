#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "aq/errors.hpp"
#include "aq/poly.hpp"
#include "aq/ratfunc.hpp"
#include "aq/rational.hpp"

namespace aq {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Mat<Rational>;
using MatF = Mat<RatFunc>;

template <class T>
Mat<T> zeros(Eigen::Index r, Eigen::Index c) {
  return Mat<T>::Constant(r, c, T(0));
}

template <class T>
Mat<T> identity(Eigen::Index n) {
  Mat<T> m = zeros<T>(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = T(1);
  return m;
}

template <class T>
bool is_zero_matrix(const Mat<T>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

// Entrywise lift of a rational matrix to rational functions.
inline MatF lift(const MatQ& m) {
  MatF out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = RatFunc(m(r, c));
  return out;
}

// Product that skips zero entries of the left factor.
template <class T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw InvalidParameter("matrix product dimension mismatch");
  Mat<T> out = zeros<T>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T, class... Rest>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b, const Rest&... rest) {
  return mul(mul(a, b), rest...);
}

template <class T>
T trace(const Mat<T>& m) {
  T t(0);
  for (Eigen::Index k = 0; k < std::min(m.rows(), m.cols()); ++k) t += m(k, k);
  return t;
}

// Reduced row echelon form by ordinary Gaussian elimination.
template <class T>
struct Echelon {
  Mat<T> r;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <class T>
Echelon<T> rref(Mat<T> m, Eigen::Index ncols = -1) {
  if (ncols < 0) ncols = m.cols();
  Echelon<T> e;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < ncols && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    T inv = T(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      T f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.r = std::move(m);
  return e;
}

template <class T>
Eigen::Index rank(const Mat<T>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

template <class T>
T det(Mat<T> m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  T d(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != col) {
      m.row(p).swap(m.row(col));
      d = -d;
    }
    d *= m(col, col);
    T inv = T(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      T f = m(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return d;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw NonSquare("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<T> aug(n, 2 * n);
  aug << m, identity<T>(n);
  Echelon<T> e = rref(std::move(aug), n);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n) throw Singular("matrix is singular");
  Mat<T> inv = e.r.rightCols(n);
  if (mul(m, inv) != identity<T>(n)) throw ValidationFailed("inverse check failed");
  return inv;
}

// Basis of the right kernel as column vectors.
template <class T>
std::vector<Mat<T>> nullspace(const Mat<T>& m) {
  Echelon<T> e = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (auto c : e.pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Mat<T>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Mat<T> v = zeros<T>(m.cols(), 1);
    v(free, 0) = T(1);
    for (size_t k = 0; k < e.pivots.size(); ++k) {
      v(e.pivots[k], 0) = -e.r(static_cast<Eigen::Index>(k), free);
    }
    if (!is_zero_matrix<T>(mul(m, v))) throw ValidationFailed("nullspace check failed");
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b (b may have several columns), or nullopt.
template <class T>
std::optional<Mat<T>> solve_linear(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw InvalidParameter("solve_linear: row count mismatch");
  Mat<T> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  Echelon<T> e = rref(std::move(aug), a.cols());
  const auto rk = static_cast<Eigen::Index>(e.pivots.size());
  for (Eigen::Index r = rk; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c)
      if (!e.r(r, a.cols() + c).is_zero()) return std::nullopt;
  Mat<T> x = zeros<T>(a.cols(), b.cols());
  for (Eigen::Index k = 0; k < rk; ++k) x.row(e.pivots[static_cast<size_t>(k)]) = e.r.row(k).tail(b.cols());
  if (mul(a, x) != b) throw ValidationFailed("solve_linear check failed");
  return x;
}

enum class VarSign { plus, minus };

// det(M -/+ t) as a polynomial in t and the coefficient matrices of its adjugate.
struct CharPolyAdj {
  Poly det;
  std::vector<MatQ> adj;  // adj = sum_m adj[m] t^m
};

CharPolyAdj char_poly_adjugate(const MatQ& m, VarSign sign = VarSign::minus);

// Evaluates sum_m c[m] s^m for a matrix polynomial at a scalar rational function s.
MatF eval_matrix_poly(const std::vector<MatQ>& c, const RatFunc& s);

}  // namespace aq
