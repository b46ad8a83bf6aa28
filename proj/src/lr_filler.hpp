#pragma once

#include <algorithm>
#include <vector>

#include "lrw/tableaux.hpp"

namespace lrw::detail {

/// Depth-first filling of a skew shape in reverse-row-word order (top row
/// first, each row right to left), keeping only ballot prefixes. Entries never
/// exceed the number of rows of the outer shape. When a target content is
/// given, partial fillings that overshoot it are cut.
class LrFiller {
 public:
  LrFiller(const SkewShape& shape, const Partition* target)
      : shape_(shape), target_(target) {
    max_entry_ = target ? target->length() : shape.rows();
    grid_.resize(static_cast<std::size_t>(shape.rows()));
    for (int r = 0; r < shape.rows(); ++r) {
      grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.outer()[r]), 0);
      for (int c = shape.outer()[r] - 1; c >= shape.inner()[r]; --c) cells_.push_back({r, c});
    }
    counts_.assign(static_cast<std::size_t>(max_entry_) + 2, 0);
  }

  /// Calls visit(*this) for every complete LR filling.
  template <class Visit>
  void run(Visit&& visit) {
    if (target_ && target_->size() != shape_.cell_count()) return;
    descend(0, visit);
  }

  const std::vector<int>& counts() const { return counts_; }

  Partition current_content() const {
    std::vector<int> parts(counts_.begin() + 1, counts_.end());
    return Partition(std::move(parts));
  }

  SkewTableau current_tableau() const {
    SkewTableau t{shape_, {}};
    t.rows.resize(grid_.size());
    for (int r = 0; r < shape_.rows(); ++r) {
      const auto& row = grid_[static_cast<std::size_t>(r)];
      t.rows[static_cast<std::size_t>(r)].assign(row.begin() + shape_.inner()[r], row.end());
    }
    return t;
  }

 private:
  struct Cell {
    int row;
    int col;
  };

  template <class Visit>
  void descend(std::size_t idx, Visit& visit) {
    if (idx == cells_.size()) {
      visit(*this);
      return;
    }
    const auto [r, c] = cells_[idx];
    auto& row = grid_[static_cast<std::size_t>(r)];
    int lo = 1;
    if (r > 0 && c >= shape_.inner()[r - 1]) lo = grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
    int hi = max_entry_;
    if (c + 1 < shape_.outer()[r]) hi = std::min(hi, row[static_cast<std::size_t>(c + 1)]);
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (v > 1 && counts_[vi - 1] <= counts_[vi]) continue;
      if (target_ && counts_[vi] >= (*target_)[vi - 1]) continue;
      row[static_cast<std::size_t>(c)] = v;
      ++counts_[vi];
      descend(idx + 1, visit);
      --counts_[vi];
    }
    row[static_cast<std::size_t>(c)] = 0;
  }

  const SkewShape& shape_;
  const Partition* target_;
  int max_entry_ = 0;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> cells_;
  std::vector<int> counts_;
};

}  // namespace lrw::detail
