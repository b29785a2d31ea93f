#include "aq/sparse.hpp"

#include <algorithm>

#include "aq/errors.hpp"

namespace aq {

namespace {

// a - f * b for sorted sparse rows; drops cancelled entries.
std::vector<SparseEchelon::Entry> axpy(const std::vector<SparseEchelon::Entry>& a, const Rational& f,
                                       const std::vector<SparseEchelon::Entry>& b) {
  std::vector<SparseEchelon::Entry> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(std::vector<Entry> row, Rational rhs) {
  if (!consistent_) return false;
  std::sort(row.begin(), row.end(), [](const Entry& l, const Entry& r) { return l.first < r.first; });
  std::vector<Entry> merged;
  for (auto& e : row) {
    if (e.first >= pivot_.size()) throw InvalidParameter("sparse row column out of range");
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });

  while (!merged.empty()) {
    const auto& p = pivot_[merged.front().first];
    if (!p) break;
    Rational f = merged.front().second;
    rhs -= f * p->rhs;
    merged = axpy(merged, f, p->e);
  }
  if (merged.empty()) {
    if (!rhs.is_zero()) consistent_ = false;
    return consistent_;
  }
  Rational inv = merged.front().second.inverse();
  for (auto& e : merged) e.second *= inv;
  rhs *= inv;
  size_t lead = merged.front().first;
  pivot_[lead] = Row{std::move(merged), std::move(rhs)};
  ++rank_;
  return true;
}

std::vector<Rational> SparseEchelon::solve() const {
  if (!consistent_) throw InvalidParameter("solve on an inconsistent system");
  std::vector<Rational> x(pivot_.size());
  for (size_t c = pivot_.size(); c-- > 0;) {
    if (!pivot_[c]) continue;
    Rational v = pivot_[c]->rhs;
    for (size_t k = 1; k < pivot_[c]->e.size(); ++k) v -= pivot_[c]->e[k].second * x[pivot_[c]->e[k].first];
    x[c] = std::move(v);
  }
  return x;
}

}  // namespace aq
