#include <doctest.h>

#include "lrw/schur.hpp"
#include "lrw/tableaux.hpp"
#include "oracles.hpp"

using namespace lrw;

namespace {

std::map<Partition, long long> as_map(const Expansion& e) { return {e.terms().begin(), e.terms().end()}; }

}  // namespace

TEST_CASE("expansion bookkeeping") {
  Expansion e;
  e.add(Partition{2}, 3);
  e.add(Partition{1, 1}, 1);
  e.add(Partition{2}, -3);
  CHECK(e.term_count() == 1);
  CHECK(e.coeff(Partition{2}) == 0);
  CHECK(e.leading_key() == Partition{1, 1});
  Expansion f(Basis::sp);
  CHECK_THROWS_AS(e.add_scaled(f), basis_mismatch);
}

TEST_CASE("small products") {
  const auto p = schur_product(Partition{1}, Partition{1});
  CHECK(p.coeff(Partition{2}) == 1);
  CHECK(p.coeff(Partition{1, 1}) == 1);
  CHECK(p.term_count() == 2);
  const auto q = schur_product(Partition{2, 1}, Partition{2, 1});
  CHECK(q.coeff(Partition{3, 2, 1}) == 2);
  CHECK(q.term_count() == 7);
}

TEST_CASE("products agree with polynomial multiplication") {
  for (const auto& mu : partitions_up_to(6))
    for (const auto& nu : partitions_up_to(6 - size(mu))) {
      const int vars = std::max(size(mu) + size(nu), 1);
      const auto expected =
          oracle::to_schur(oracle::times(oracle::schur_poly(mu, vars), oracle::schur_poly(nu, vars)), vars);
      CHECK(as_map(schur_product(mu, nu)) == expected);
    }
}

TEST_CASE("skew expansions agree with skew polynomials") {
  for (const auto& lambda : partitions_up_to(6))
    for (const auto& nu : partitions_contained_in(lambda)) {
      const int vars = std::max(size(lambda) - size(nu), 1);
      CHECK(as_map(skew_schur_expand(lambda, nu)) == oracle::to_schur(oracle::skew_schur_poly(lambda, nu, vars), vars));
    }
}

TEST_CASE("skewing is adjoint to multiplication") {
  for (const auto& lambda : partitions_up_to(6))
    for (const auto& nu : partitions_contained_in(lambda)) {
      const auto skewed = skew(schur(lambda), nu);
      for (const auto& [mu, c] : skewed.terms()) CHECK(c == lr_coefficient(lambda, mu, nu));
    }
}

TEST_CASE("omega conjugates and is an involution") {
  const auto e = omega(schur(Partition{3, 1}));
  CHECK(e.coeff(Partition{2, 1, 1}) == 1);
  for (const auto& lambda : partitions_up_to(8)) CHECK(omega(omega(schur(lambda))) == schur(lambda));
  CHECK(omega(schur_product(Partition{2}, Partition{1})) ==
        mult(omega(schur(Partition{2})), omega(schur(Partition{1}))));
}

TEST_CASE("Jacobi-Trudi terms") {
  // det [[h2, h3], [h0, h1]] = h2 h1 - h3
  const auto jt = jacobi_trudi(Partition{2, 1});
  CHECK(jt.basis() == Basis::h_monomial);
  CHECK(jt.coeff(Partition{2, 1}) == 1);
  CHECK(jt.coeff(Partition{3}) == -1);
  CHECK(jt.term_count() == 2);
  CHECK(jacobi_trudi(Partition{}).coeff(Partition{}) == 1);
}

TEST_CASE("Jacobi-Trudi round trips through the skew expansion") {
  for (const auto& lambda : partitions_up_to(7))
    for (const auto& nu : partitions_contained_in(lambda))
      CHECK(h_monomial_to_schur(jacobi_trudi(lambda, nu)) == skew_schur_expand(lambda, nu));
}

TEST_CASE("Jacobi-Trudi determinant equals the skew Schur polynomial") {
  for (const auto& lambda : partitions_up_to(5))
    for (const auto& nu : partitions_contained_in(lambda)) {
      const int vars = std::max(size(lambda) - size(nu), 1);
      CHECK(oracle::jacobi_trudi_poly(lambda, nu, vars) == oracle::skew_schur_poly(lambda, nu, vars));
    }
}

TEST_CASE("library Schur polynomials match the oracle") {
  for (const auto& lambda : partitions_up_to(6))
    for (int n = 1; n <= 4; ++n) {
      const auto lib = schur_polynomial(lambda, n);
      CHECK(oracle::Poly(lib.begin(), lib.end()) == oracle::schur_poly(lambda, n));
    }
  CHECK(schur_polynomial(Partition{1, 1, 1}, 2).empty());
  CHECK_THROWS_AS(schur_polynomial(Partition{1}, 0), invalid_input);
}
