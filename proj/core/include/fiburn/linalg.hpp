// Exact-rational row spaces: incremental Gaussian elimination used for rank
// and image-basis computations.  No pivot thresholds, everything exact.

#ifndef FIBURN_LINALG_HPP
#define FIBURN_LINALG_HPP

#include <vector>

#include "fiburn/rational.hpp"

namespace fiburn {

class RowSpace {
 public:
  explicit RowSpace(int width) : width_(width) {}

  /// Reduces v against the stored rows; returns true (and keeps the reduced
  /// row) when v enlarges the span.
  bool add(std::vector<Rat> v) {
    reduce(v);
    int p = pivot_of(v);
    if (p < 0) return false;
    Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<Rat> v) const {
    reduce(v);
    return pivot_of(v) < 0;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

 private:
  void reduce(std::vector<Rat>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& c = v[pivots_[i]];
      if (c == 0) continue;
      Rat f = c;
      for (int j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
    }
  }
  int pivot_of(const std::vector<Rat>& v) const {
    for (int j = 0; j < width_; ++j)
      if (!(v[j] == 0)) return j;
    return -1;
  }

  int width_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
};

}  // namespace fiburn

#endif  // FIBURN_LINALG_HPP
