#include "lrw/tableaux.hpp"

#include <algorithm>

#include "lr_filler.hpp"

namespace lrw {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw invalid_input("skew shape " + to_string(outer_) + "/" + to_string(inner_) +
                        ": inner diagram does not fit");
}

bool is_semistandard(const SkewTableau& t) {
  const auto& shape = t.shape;
  if (static_cast<int>(t.rows.size()) != shape.rows()) return false;
  for (int r = 0; r < shape.rows(); ++r) {
    const auto& row = t.rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != shape.row_cells(r)) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) return false;
      if (j + 1 < row.size() && row[j] > row[j + 1]) return false;
      if (r == 0) continue;
      const int col = shape.inner()[r] + static_cast<int>(j);
      const int above_inner = shape.inner()[r - 1];
      if (col >= above_inner) {
        const auto& above = t.rows[static_cast<std::size_t>(r - 1)];
        if (above[static_cast<std::size_t>(col - above_inner)] >= row[j]) return false;
      }
    }
  }
  return true;
}

std::vector<int> reverse_row_word(const SkewTableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool is_ballot(std::span<const int> word) {
  std::vector<int> counts;
  for (int v : word) {
    if (v < 1) return false;
    const auto vi = static_cast<std::size_t>(v);
    if (counts.size() <= vi) counts.resize(vi + 1, 0);
    ++counts[vi];
    if (v > 1 && counts[vi] > counts[vi - 1]) return false;
  }
  return true;
}

Partition content(const SkewTableau& t) {
  std::vector<int> counts;
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v < 1) throw not_a_partition("tableau entries must be positive");
      const auto vi = static_cast<std::size_t>(v);
      if (counts.size() < vi) counts.resize(vi, 0);
      ++counts[vi - 1];
    }
  for (std::size_t i = 0; i + 1 < counts.size(); ++i)
    if (counts[i] < counts[i + 1]) throw not_a_partition("tableau content is not weakly decreasing");
  return Partition(std::move(counts));
}

namespace {

std::vector<SkewTableau> collect(const SkewShape& shape, const Partition* target) {
  std::vector<SkewTableau> out;
  detail::LrFiller filler(shape, target);
  filler.run([&](const detail::LrFiller& f) { out.push_back(f.current_tableau()); });
  std::sort(out.begin(), out.end(),
            [](const SkewTableau& a, const SkewTableau& b) { return a.rows < b.rows; });
  return out;
}

}  // namespace

std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape) { return collect(shape, nullptr); }

std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& with_content) {
  return collect(shape, &with_content);
}

coeff_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  const SkewShape shape(lambda, mu);
  coeff_t count = 0;
  detail::LrFiller filler(shape, &nu);
  filler.run([&](const detail::LrFiller&) { ++count; });
  return count;
}

}  // namespace lrw
