#pragma once

#include <string>
#include <vector>

#include "lrw/core.hpp"
#include "lrw/lie.hpp"

namespace lrw {

/// Positive roots of a B, C or D algebra in simple-root coordinates, ordered
/// by height and then lexicographically. Throws unsupported_family for A.
std::vector<RootLatticeElement> positive_roots(const LieSpec& spec);

/// One beta root. For the (k, l) family 1 <= k < l; the extra symplectic root
/// 2 alpha_1 + ... + 2 alpha_{n-1} + alpha_n is stored with k = l = 0.
struct BetaRoot {
  RootLatticeElement root;
  int k;
  int l;
  bool extra() const { return k == 0; }
};

struct BetaSet {
  LieSpec spec;
  /// beta_1, ..., beta_N: the (k, l) roots in lexicographic order, then the
  /// extra symplectic root when present.
  std::vector<BetaRoot> roots;
  /// The "n" in the (k, l) labelling: rank for B and C, rank - 1 for D
  /// (so(2n+2) has rank n+1). Pairs run over 1 <= k < l <= label_n - 1.
  int label_n;

  std::size_t size() const { return roots.size(); }
};

BetaSet beta_roots(const LieSpec& spec);

/// True when the minimal connected sub-diagram spanned by supp(eta) is a
/// simply-laced path. Throws invalid_input for a zero or negative eta.
bool type_a_support(const RootLatticeElement& eta, const LieSpec& spec);

/// Every s in Z_{>=0}^N with diff = sum_j s_j beta_j, in lexicographic order.
std::vector<std::vector<int>> cone_membership(const RootLatticeElement& diff, const BetaSet& betas);
std::vector<std::vector<int>> cone_membership(const RootLatticeElement& diff, const LieSpec& spec);

struct CommuteViolation {
  /// "i": beta_r + beta_s is a root; "ii": beta_r + beta_s - alpha_i is a
  /// root; "iii": beta_r - alpha_i is a root that is neither a later beta nor
  /// the allowed beta_{k,n-1} - alpha_{n-1} case.
  std::string clause;
  int r;      // 1-based beta index
  int s;      // 1-based beta index, 0 when unused
  int node;   // 1-based simple root index, 0 when unused
  RootLatticeElement witness;
};

struct CommuteReport {
  BetaSet betas;
  std::vector<CommuteViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the three commutation clauses by enumeration; pairs (r, s) are
/// processed as parallel tasks and the violations merged in (r, s, node) order.
CommuteReport commute_check(const LieSpec& spec);

}  // namespace lrw
