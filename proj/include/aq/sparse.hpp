#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

// Incremental row echelon form of a sparse linear system over Q.
// Rows are reduced against stored pivots as they arrive, so an inconsistent
// system is reported as soon as a row reduces to 0 = c with c != 0.
class SparseEchelon {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  explicit SparseEchelon(std::size_t ncols) : pivot_(ncols) {}

  // Entries may be unsorted and repeated (repeats are summed).
  bool add_row(std::vector<Entry> row, Rational rhs);
  bool consistent() const { return consistent_; }
  std::size_t rank() const { return rank_; }

  // Particular solution with free variables set to zero; requires consistent().
  std::vector<Rational> solve() const;

 private:
  struct Row {
    std::vector<Entry> e;  // sorted by column, leading entry equal to 1
    Rational rhs;
  };
  std::vector<std::optional<Row>> pivot_;
  bool consistent_ = true;
  std::size_t rank_ = 0;
};

}  // namespace aq
