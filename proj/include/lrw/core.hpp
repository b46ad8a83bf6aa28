#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lrw {

using coeff_t = std::int64_t;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (bad partition text, out-of-range node, ...).
class invalid_input : public error {
 public:
  using error::error;
};

class rank_too_small : public error {
 public:
  using error::error;
};

class not_a_partition : public error {
 public:
  using error::error;
};

class basis_mismatch : public error {
 public:
  using error::error;
};

class unsupported_family : public error {
 public:
  using error::error;
};

/// Weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// Number of nonzero parts (rows of the Young diagram).
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0-based; zero past the last row.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int size() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

int size(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

std::string to_string(const Partition& p);
/// Parses "4,3,1"; the empty string (or "0", "[]", "-") is the empty partition.
Partition parse_partition(std::string_view text);

/// Total order used for serialized output: more boxes first, then
/// descending lexicographic.
bool size_then_lex_greater(const Partition& a, const Partition& b);

/// All partitions of n, in descending lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions with at most n boxes (including the empty one).
std::vector<Partition> partitions_up_to(int n);
/// All partitions whose diagram fits inside `outer`.
std::vector<Partition> partitions_contained_in(const Partition& outer);

/// Coefficients of omega_1..omega_n. The rank is the length of the vector and
/// is never inferred.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> coeffs);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  std::span<const int> coeffs() const { return coeffs_; }
  const std::vector<int>& vec() const { return coeffs_; }
  int operator[](std::size_t i) const { return coeffs_.at(i); }

  auto operator<=>(const DominantWeight&) const = default;
  bool operator==(const DominantWeight&) const = default;

 private:
  std::vector<int> coeffs_;
};

std::string to_string(const DominantWeight& w);
/// Parses "1,2,1@rank=3"; without the suffix the rank is the number of
/// coefficients given. Missing trailing coefficients are zero.
DominantWeight parse_weight(std::string_view text);

/// Integer combination of simple roots alpha_1..alpha_n.
struct RootLatticeElement {
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool is_nonnegative() const;

  auto operator<=>(const RootLatticeElement&) const = default;
  bool operator==(const RootLatticeElement&) const = default;
};

Partition partition_from_weight(const DominantWeight& w);
DominantWeight weight_from_partition(const Partition& p, int rank);

}  // namespace lrw
