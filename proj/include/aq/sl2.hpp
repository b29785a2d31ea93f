#pragma once

#include <ostream>

namespace aq {

// Integer 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  long a = 1, b = 0, c = 0, d = 1;

  long det() const { return a * d - b * c; }
  // Inverse of a determinant-one matrix.
  Mat2 inverse() const { return {d, -b, -c, a}; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
  }
};

inline constexpr Mat2 kG1{1, 1, 0, 1};
inline constexpr Mat2 kG2{1, 0, -1, 1};

}  // namespace aq
