#include "lrw/classical.hpp"

#include <algorithm>

#include "lrw/parallel.hpp"
#include "lrw/tableaux.hpp"

namespace lrw {

std::string_view to_string(Family f) { return f == Family::sp ? "Sp" : "O"; }

Family parse_family(std::string_view text) {
  if (text == "sp" || text == "Sp" || text == "SP" || text == "C") return Family::sp;
  if (text == "o" || text == "O" || text == "B" || text == "D") return Family::o;
  throw invalid_input("unknown family '" + std::string(text) + "' (expected sp or o)");
}

Basis basis_of(Family f) { return f == Family::sp ? Basis::sp : Basis::o; }

bool in_Yv(const Partition& nu) {
  const auto parts = nu.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if ((j - i) % 2) return false;
    i = j;
  }
  return true;
}

bool in_Yh(const Partition& nu) {
  return std::all_of(nu.parts().begin(), nu.parts().end(), [](int p) { return p % 2 == 0; });
}

std::vector<Partition> domino_partitions_within(const Partition& lambda, bool vertical) {
  auto all = partitions_contained_in(lambda);
  std::erase_if(all, [&](const Partition& nu) { return vertical ? !in_Yv(nu) : !in_Yh(nu); });
  return all;
}

namespace {

Expansion relabel(const Expansion& schur_exp, Basis basis) {
  return Expansion(basis, schur_exp.terms());
}

Expansion skew_sum(const Partition& lambda, bool vertical) {
  Expansion sum(Basis::schur);
  for (const auto& nu : domino_partitions_within(lambda, vertical))
    sum.add_scaled(skew_schur_expand(lambda, nu));
  return sum;
}

template <class Runner>
WDecomposition w_decomp_impl(const Partition& lambda, Family family, Runner&& run) {
  // W_Sp sums over horizontal dominoes and W_O over vertical ones, the
  // opposite of the GL branching rule.
  const auto nus = domino_partitions_within(lambda, family == Family::o);
  std::vector<Expansion> parts(nus.size());
  run(nus.size(), [&](std::size_t i) { parts[i] = skew_schur_expand(lambda, nus[i]); });
  WDecomposition w{family, lambda, {}};
  for (const auto& part : parts)
    for (const auto& [mu, c] : part.terms()) w.terms[mu] += c;
  return w;
}

}  // namespace

Expansion branch_schur(const Partition& lambda, Family target) {
  return relabel(skew_sum(lambda, target == Family::sp), basis_of(target));
}

Expansion branch(const Expansion& schur_expansion, Family target) {
  if (schur_expansion.basis() != Basis::schur)
    throw basis_mismatch("branch needs a Schur-basis expansion");
  Expansion out(basis_of(target));
  for (const auto& [lambda, c] : schur_expansion.terms()) out.add_scaled(branch_schur(lambda, target), c);
  return out;
}

Expansion to_schur(const Expansion& a) {
  if (a.basis() != Basis::sp && a.basis() != Basis::o)
    throw basis_mismatch("to_schur needs an sp- or o-basis expansion");
  const Family family = a.basis() == Basis::sp ? Family::sp : Family::o;
  // branch_schur is unitriangular with respect to box count, so peeling off
  // the largest remaining key terminates.
  Expansion remaining = a;
  Expansion out(Basis::schur);
  while (!remaining.is_zero()) {
    const Partition lead = remaining.leading_key();
    const coeff_t c = remaining.coeff(lead);
    out.add(lead, c);
    remaining.add_scaled(branch_schur(lead, family), -c);
  }
  return out;
}

Expansion classical_product(const Partition& mu, const Partition& nu, Family basis) {
  const Basis b = basis_of(basis);
  const auto left = to_schur(Expansion::single(mu, 1, b));
  const auto right = to_schur(Expansion::single(nu, 1, b));
  return branch(mult(left, right), basis);
}

coeff_t d_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda, Family basis) {
  const int deficit = mu.size() + nu.size() - lambda.size();
  if (deficit < 0 || deficit % 2) return 0;
  return classical_product(mu, nu, basis).coeff(lambda);
}

Expansion WDecomposition::as_expansion() const {
  Expansion e(basis_of(family));
  for (const auto& [mu, c] : terms) e.add(mu, c);
  return e;
}

WDecomposition w_decomp(const Partition& lambda, Family family) {
  return w_decomp_impl(lambda, family, [](std::size_t n, auto&& body) { detail::parallel_for(n, body); });
}

WDecomposition w_decomp_serial(const Partition& lambda, Family family) {
  return w_decomp_impl(lambda, family, [](std::size_t n, auto&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
  });
}

TensorSides w_tensor_check(const Partition& mu, const Partition& nu, Family family) {
  const Basis b = basis_of(family);
  const auto w_mu = w_decomp(mu, family);
  const auto w_nu = w_decomp(nu, family);
  TensorSides sides{Expansion(b), Expansion(b)};
  for (const auto& [kappa, m1] : w_mu.terms)
    for (const auto& [kappa2, m2] : w_nu.terms)
      sides.lhs.add_scaled(classical_product(kappa, kappa2, family), m1 * m2);
  const auto product = schur_product(mu, nu);
  for (const auto& [lambda, c] : product.terms())
    sides.rhs.add_scaled(w_decomp(lambda, family).as_expansion(), c);
  return sides;
}

int min_stable_rank(const Partition& lambda, StableFamily family) {
  // The trivial character is irreducible at every rank.
  if (lambda.empty()) return 1;
  return lambda.length() + (family == StableFamily::o_even ? 2 : 1);
}

}  // namespace lrw
