#include "lrw/lie.hpp"

#include <numeric>

namespace lrw {

LieType parse_lie_type(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return LieType::A;
      case 'B': case 'b': return LieType::B;
      case 'C': case 'c': return LieType::C;
      case 'D': case 'd': return LieType::D;
      default: break;
    }
  }
  throw invalid_input("unknown Lie type '" + std::string(text) + "' (expected A, B, C or D)");
}

char to_char(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

LieSpec::LieSpec(LieType type, int rank) : type_(type), rank_(rank) {
  const int min_rank = type == LieType::D ? 4 : (type == LieType::A ? 1 : 2);
  if (rank < min_rank)
    throw invalid_input(std::string(1, to_char(type)) + " needs rank >= " + std::to_string(min_rank));
  const int dim = type == LieType::A ? rank + 1 : rank;
  const auto n = static_cast<std::size_t>(rank);
  simple_eps_.assign(n, std::vector<int>(static_cast<std::size_t>(dim), 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    simple_eps_[i][i] = 1;
    simple_eps_[i][i + 1] = -1;
  }
  auto& last = simple_eps_[n - 1];
  switch (type) {
    case LieType::A: last[n - 1] = 1; last[n] = -1; break;
    case LieType::B: last[n - 1] = 1; break;
    case LieType::C: last[n - 1] = 2; break;
    case LieType::D: last[n - 2] = 1; last[n - 1] = 1; break;
  }
  auto dot = [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0);
  };
  cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cartan_[i][j] = 2 * dot(simple_eps_[i], simple_eps_[j]) / dot(simple_eps_[j], simple_eps_[j]);
}

std::string LieSpec::name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

std::vector<int> LieSpec::root_to_weight(std::span<const int> root) const {
  if (static_cast<int>(root.size()) != rank_) throw invalid_input("root has wrong rank");
  std::vector<int> w(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[static_cast<std::size_t>(j)] += root[static_cast<std::size_t>(i)] * cartan(i, j);
  return w;
}

std::vector<Rational> LieSpec::weight_to_root(std::span<const int> weight) const {
  if (static_cast<int>(weight.size()) != rank_) throw invalid_input("weight has wrong rank");
  const auto n = static_cast<std::size_t>(rank_);
  // Solve cartan^T x = weight.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (std::size_t j = 0; j < n; ++j) {
    b[j] = weight[j];
    for (std::size_t i = 0; i < n; ++i) a[j][i] = cartan_[i][j];
  }
  return *solve_exact(a, b);
}

std::optional<std::vector<int>> LieSpec::eps_to_root(std::span<const int> eps) const {
  const auto dim = static_cast<std::size_t>(eps_dimension());
  if (eps.size() != dim) throw invalid_input("epsilon vector has wrong dimension");
  const auto n = static_cast<std::size_t>(rank_);
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(n));
  std::vector<Rational> b(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    b[d] = eps[d];
    for (std::size_t i = 0; i < n; ++i) a[d][i] = simple_eps_[i][d];
  }
  auto x = solve_exact(a, b);
  if (!x) return std::nullopt;
  std::vector<int> out;
  for (const auto& q : *x) {
    if (q.denominator() != 1) return std::nullopt;
    out.push_back(static_cast<int>(q.numerator()));
  }
  return out;
}

std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a[r][c];
    m[r][cols] = b[r];
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c].numerator() == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(m[p], m[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c].numerator() == 0) continue;
      const Rational f = m[r][c] / m[pivot_row][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[pivot_row][k];
    }
    ++pivot_row;
  }
  for (std::size_t r = cols; r < rows; ++r)
    if (m[r][cols].numerator() != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = m[c][cols] / m[c][c];
  return x;
}

}  // namespace lrw
