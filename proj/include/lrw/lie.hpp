#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "lrw/core.hpp"

namespace lrw {

enum class LieType { A, B, C, D };

LieType parse_lie_type(std::string_view text);
char to_char(LieType t);

using Rational = boost::rational<long long>;

/// A classical simple Lie algebra with Bourbaki node labels: for B_n the last
/// node is the short root, for C_n the long root, and for D_n nodes n-1 and n
/// are the spin nodes.
class LieSpec {
 public:
  LieSpec(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// cartan(i, j) = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j), 0-based. Row i
  /// holds alpha_i in fundamental-weight coordinates.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Nodes i != j joined in the Dynkin diagram.
  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }

  /// Simple roots in the orthonormal epsilon basis. Dimension rank+1 for A,
  /// rank otherwise.
  const std::vector<std::vector<int>>& simple_roots_eps() const { return simple_eps_; }
  int eps_dimension() const { return static_cast<int>(simple_eps_.front().size()); }

  /// sum_i root[i] alpha_i in fundamental-weight coordinates.
  std::vector<int> root_to_weight(std::span<const int> root) const;
  /// Simple-root coordinates of a weight (exact, possibly fractional).
  std::vector<Rational> weight_to_root(std::span<const int> weight) const;
  /// Simple-root coordinates of an epsilon-basis vector, or nullopt when it is
  /// not an integral combination of simple roots.
  std::optional<std::vector<int>> eps_to_root(std::span<const int> eps) const;

  bool operator==(const LieSpec& other) const { return type_ == other.type_ && rank_ == other.rank_; }

 private:
  LieType type_;
  int rank_;
  std::vector<std::vector<int>> simple_eps_;
  std::vector<std::vector<int>> cartan_;
};

/// Exact solution of A x = b for a system with a unique solution; rows may
/// outnumber columns. Returns nullopt when inconsistent or singular.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b);

}  // namespace lrw
