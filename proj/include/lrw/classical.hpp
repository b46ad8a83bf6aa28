#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "lrw/schur.hpp"

namespace lrw {

enum class Family { sp, o };
/// Families distinguished by their stable range.
enum class StableFamily { sp, o_odd, o_even };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);
Basis basis_of(Family f);

/// Every part occurs an even number of times (tileable by vertical dominoes).
bool in_Yv(const Partition& nu);
/// Every part is even (tileable by horizontal dominoes).
bool in_Yh(const Partition& nu);

/// The domino-tileable partitions inside lambda: Yv when vertical is true,
/// otherwise Yh.
std::vector<Partition> domino_partitions_within(const Partition& lambda, bool vertical);

/// s_lambda in the sp (target sp) or o (target o) basis:
/// sum over nu in Yv (sp) or Yh (o) of s_{lambda/nu}, relabelled.
Expansion branch_schur(const Partition& lambda, Family target);
/// Linear extension of branch_schur to a Schur-basis expansion.
Expansion branch(const Expansion& schur_expansion, Family target);
/// Inverse of branch: an sp- or o-basis expansion rewritten in Schur functions.
Expansion to_schur(const Expansion& a);

/// sp_mu * sp_nu in the sp basis (basis == sp) or o_mu * o_nu in the o basis.
Expansion classical_product(const Partition& mu, const Partition& nu, Family basis);
/// Coefficient of lambda in classical_product(mu, nu, basis).
coeff_t d_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda,
                      Family basis = Family::sp);

/// Irreducible decomposition of W_Sp(top) or W_O(top): multiplicities of V_G(mu).
struct WDecomposition {
  Family family;
  Partition top;
  std::map<Partition, coeff_t> terms;

  coeff_t mult(const Partition& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? 0 : it->second;
  }
  /// The multiplicities as an sp- or o-basis expansion.
  Expansion as_expansion() const;

  bool operator==(const WDecomposition&) const = default;
};

/// Multiplicity of mu is the sum of c^lambda_{mu nu} over nu in Yh (Sp) or
/// Yv (O); the skew expansions for different nu run as parallel tasks.
WDecomposition w_decomp(const Partition& lambda, Family family);
WDecomposition w_decomp_serial(const Partition& lambda, Family family);

/// Both sides of W(mu) (x) W(nu) = sum_lambda c^lambda_{mu nu} W(lambda), as
/// expansions in the V_G basis of the family.
struct TensorSides {
  Expansion lhs;
  Expansion rhs;
  bool equal() const { return lhs == rhs; }
};
TensorSides w_tensor_check(const Partition& mu, const Partition& nu, Family family);

/// Smallest rank at which the universal character of lambda specializes to
/// an irreducible character.
int min_stable_rank(const Partition& lambda, StableFamily family);

}  // namespace lrw
