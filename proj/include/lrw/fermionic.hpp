#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lrw/core.hpp"
#include "lrw/lie.hpp"

namespace lrw {

/// One tensor factor V(m * omega_node); node is 1-based.
struct Factor {
  int m;
  int node;
  bool operator==(const Factor&) const = default;
};

class FactorList {
 public:
  explicit FactorList(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  /// Throws invalid_input when a node is outside 1..spec.rank().
  void check_against(const LieSpec& spec) const;

 private:
  std::vector<Factor> factors_;
};

/// One partition per Dynkin node; nus[k-1] is a partition of n_k.
struct Configuration {
  std::vector<Partition> nus;
};

/// sum_a m_a omega_{l_a}.
DominantWeight top_weight(const LieSpec& spec, const FactorList& factors);

/// The n_i with lambda = top - sum_i n_i alpha_i, or nullopt when some n_i is
/// negative or fractional.
std::optional<std::vector<int>> alpha_coords(const LieSpec& spec, const FactorList& factors,
                                             const DominantWeight& lambda);

/// Vacancy number P^{(k)}_n for node k (1-based) and part size n >= 1.
long long vacancy(const LieSpec& spec, const FactorList& factors, const Configuration& config, int k,
                  int n);

/// Fermionic multiplicity n_lambda. A binomial (a choose b) with a < b is
/// zero, so any negative vacancy number kills its configuration.
coeff_t fermionic_multiplicity(const LieSpec& spec, const FactorList& factors,
                               const DominantWeight& lambda);

/// All dominant lambda below the top weight with n_lambda > 0. Candidate
/// weights are evaluated as parallel tasks.
std::map<DominantWeight, coeff_t> fermionic_decomp(const LieSpec& spec, const FactorList& factors);
std::map<DominantWeight, coeff_t> fermionic_decomp_serial(const LieSpec& spec, const FactorList& factors);

}  // namespace lrw
