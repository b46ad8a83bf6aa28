#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "lrw/core.hpp"

namespace lrw {

/// Which basis the keys of an Expansion refer to. For h_monomial the key
/// <k1,k2,...> stands for the product h_{k1} h_{k2} ...
enum class Basis { schur, h_monomial, sp, o };

std::string_view to_string(Basis b);

/// Finite integer combination of basis elements indexed by partitions. Zero
/// coefficients are never stored.
class Expansion {
 public:
  using map_type = std::map<Partition, coeff_t>;

  explicit Expansion(Basis basis = Basis::schur) : basis_(basis) {}
  Expansion(Basis basis, map_type terms);

  static Expansion single(Partition p, coeff_t c = 1, Basis basis = Basis::schur);

  Basis basis() const { return basis_; }
  const map_type& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  coeff_t coeff(const Partition& p) const;
  void add(const Partition& p, coeff_t c);
  /// this += scale * other; bases must agree.
  void add_scaled(const Expansion& other, coeff_t scale = 1);

  /// Largest key under the size-then-lexicographic order; precondition: nonzero.
  const Partition& leading_key() const;

  bool operator==(const Expansion&) const = default;

 private:
  Basis basis_;
  map_type terms_;
};

using SchurExpansion = Expansion;

inline Expansion schur(Partition p) { return Expansion::single(std::move(p)); }

/// s_mu * s_nu.
Expansion schur_product(const Partition& mu, const Partition& nu);

/// Bilinear product in the Schur basis. The LR coefficients for all term
/// pairs and candidate shapes are evaluated as independent OpenMP tasks.
Expansion mult(const Expansion& a, const Expansion& b);
/// Single-threaded reference for mult.
Expansion mult_serial(const Expansion& a, const Expansion& b);

/// s_{lambda/nu} expanded in Schur functions via LR tableaux.
Expansion skew_schur_expand(const Partition& lambda, const Partition& nu);
/// Linear extension of s_lambda -> s_{lambda/nu}.
Expansion skew(const Expansion& a, const Partition& nu);

Expansion omega(const Expansion& a);

/// Formal expansion of det(h_{lambda_i - nu_j - i + j}) into h-monomials,
/// with h_0 = 1 and h_k = 0 for k < 0.
Expansion jacobi_trudi(const Partition& lambda, const Partition& nu = {});
Expansion h_monomial_to_schur(const Expansion& a);

/// Exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, coeff_t>;

/// s_lambda(x_1..x_n) as the generating function of semistandard tableaux
/// with entries in 1..n.
Polynomial schur_polynomial(const Partition& lambda, int num_vars);

}  // namespace lrw
