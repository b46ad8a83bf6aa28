#pragma once

#include <span>
#include <vector>

#include "lrw/core.hpp"

namespace lrw {

/// The skew diagram outer/inner. Construction fails unless inner fits in outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  /// Number of cells in row r (0-based).
  int row_cells(int r) const { return outer_[r] - inner_[r]; }
  int cell_count() const { return outer_.size() - inner_.size(); }

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// A filling of a skew shape. rows[r] lists the entries of row r from left to
/// right and has exactly row_cells(r) entries.
struct SkewTableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;

  bool operator==(const SkewTableau&) const = default;
};

/// Rows weakly increase, columns strictly increase, entries are positive and
/// row lengths match the shape.
bool is_semistandard(const SkewTableau& t);

/// Rows read right to left, top row first.
std::vector<int> reverse_row_word(const SkewTableau& t);

bool is_ballot(std::span<const int> word);

/// Multiplicities of 1, 2, ...; throws not_a_partition when they are not
/// weakly decreasing.
Partition content(const SkewTableau& t);

/// Semistandard tableaux of `shape` whose reverse row word is a ballot
/// sequence, ordered lexicographically row by row.
std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape);
/// Same, restricted to tableaux with the given content.
std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& with_content);

/// c^lambda_{mu nu}: the number of LR tableaux of shape lambda/mu with content nu.
coeff_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace lrw
