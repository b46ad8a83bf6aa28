#include <doctest.h>

#include "lrw/classical.hpp"
#include "oracles.hpp"

using namespace lrw;

namespace {

Expansion of(Basis basis, std::initializer_list<std::pair<Partition, coeff_t>> terms) {
  Expansion e(basis);
  for (const auto& [p, c] : terms) e.add(p, c);
  return e;
}

// Multiplicities straight from the definition, using oracle LR numbers.
std::map<Partition, coeff_t> w_oracle(const Partition& lambda, Family family) {
  std::map<Partition, coeff_t> out;
  for (const auto& nu : partitions_contained_in(lambda)) {
    if (family == Family::sp ? !in_Yh(nu) : !in_Yv(nu)) continue;
    for (const auto& mu : partitions_of(size(lambda) - size(nu)))
      if (const auto c = oracle::lr(lambda, mu, nu)) out[mu] += c;
  }
  return out;
}

}  // namespace

TEST_CASE("domino classes") {
  CHECK(in_Yv(Partition{1, 1}));
  CHECK_FALSE(in_Yh(Partition{1, 1}));
  CHECK(in_Yv(Partition{2, 2}));
  CHECK(in_Yh(Partition{2, 2}));
  CHECK(in_Yv(Partition{}));
  CHECK(in_Yh(Partition{}));
  CHECK_FALSE(in_Yv(Partition{2, 1}));
  CHECK(in_Yh(Partition{4, 2}));
  for (const auto& p : partitions_up_to(8)) CHECK(in_Yv(p) == in_Yh(conjugate(p)));
}

TEST_CASE("branching examples") {
  CHECK(branch_schur(Partition{1, 1}, Family::sp) == of(Basis::sp, {{{1, 1}, 1}, {{}, 1}}));
  CHECK(branch_schur(Partition{2}, Family::o) == of(Basis::o, {{{2}, 1}, {{}, 1}}));
  CHECK(branch_schur(Partition{1}, Family::sp) == of(Basis::sp, {{{1}, 1}}));
  CHECK(to_schur(Expansion::single(Partition{1, 1}, 1, Basis::sp)) == of(Basis::schur, {{{1, 1}, 1}, {{}, -1}}));
  CHECK(to_schur(Expansion::single(Partition{1}, 1, Basis::sp)) == of(Basis::schur, {{{1}, 1}}));
  CHECK(to_schur(Expansion::single(Partition{2}, 1, Basis::o)) == of(Basis::schur, {{{2}, 1}, {{}, -1}}));
}

TEST_CASE("branching is unitriangular and inverts") {
  for (const auto& lambda : partitions_up_to(8))
    for (Family f : {Family::sp, Family::o}) {
      const auto b = branch_schur(lambda, f);
      CHECK(b.coeff(lambda) == 1);
      for (const auto& [mu, c] : b.terms()) {
        CHECK(c > 0);
        if (mu == lambda) continue;
        CHECK(contains(lambda, mu));
        CHECK(size(mu) < size(lambda));
      }
      CHECK(to_schur(b) == schur(lambda));
    }
}

TEST_CASE("to_schur rejects Schur input") {
  CHECK_THROWS_AS(to_schur(schur(Partition{1})), basis_mismatch);
}

TEST_CASE("d coefficients") {
  for (Family f : {Family::sp, Family::o}) {
    CHECK(d_coefficient(Partition{1}, Partition{1}, Partition{}, f) == 1);
    CHECK(d_coefficient(Partition{1}, Partition{1}, Partition{2}, f) == 1);
    CHECK(d_coefficient(Partition{1}, Partition{1}, Partition{1, 1}, f) == 1);
    CHECK(d_coefficient(Partition{1}, Partition{1}, Partition{1}, f) == 0);
    CHECK(d_coefficient(Partition{3, 1}, Partition{}, Partition{3, 1}, f) == 1);
  }
  // sp_{21} sp_{1} contains sp_{2} and sp_{11} once each at deficit 2.
  CHECK(d_coefficient(Partition{2, 1}, Partition{1}, Partition{2}) == 1);
  CHECK(d_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
}

TEST_CASE("d coefficients: Sp = O, top degree = LR, even grading, pairing with the empty key") {
  for (const auto& mu : partitions_up_to(4))
    for (const auto& nu : partitions_up_to(4)) {
      const auto sp = classical_product(mu, nu, Family::sp);
      const auto o = classical_product(mu, nu, Family::o);
      CHECK(sp.basis() == Basis::sp);
      CHECK(sp.terms() == o.terms());
      for (const auto& [lambda, d] : sp.terms()) {
        const int deficit = size(mu) + size(nu) - size(lambda);
        CHECK(d > 0);
        CHECK(deficit >= 0);
        CHECK(deficit % 2 == 0);
        if (deficit == 0) CHECK(d == oracle::lr(lambda, mu, nu));
      }
      CHECK(sp.coeff(Partition{}) == (mu == nu ? 1 : 0));
    }
}

TEST_CASE("W decompositions") {
  const auto six = w_decomp(Partition{3, 2, 1}, Family::o);
  CHECK(six.terms == std::map<Partition, coeff_t>{
                         {{3, 2, 1}, 1}, {{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}, {{2}, 1}, {{1, 1}, 1}});
  CHECK(w_decomp(Partition{2}, Family::sp).terms == std::map<Partition, coeff_t>{{{2}, 1}, {{}, 1}});
  CHECK(w_decomp(Partition{2}, Family::o).terms == std::map<Partition, coeff_t>{{{2}, 1}});
  CHECK(w_decomp(Partition{1, 1}, Family::o).terms == std::map<Partition, coeff_t>{{{1, 1}, 1}, {{}, 1}});
  CHECK(w_decomp(Partition{2, 2, 1, 1}, Family::o).mult(Partition{1, 1}) == 2);
  CHECK(six.as_expansion().basis() == Basis::o);
}

TEST_CASE("W decompositions against the oracle definition") {
  for (const auto& lambda : partitions_up_to(6))
    for (Family f : {Family::sp, Family::o}) CHECK(w_decomp(lambda, f).terms == w_oracle(lambda, f));
}

TEST_CASE("W decomposition structure") {
  for (const auto& lambda : partitions_up_to(8))
    for (Family f : {Family::sp, Family::o}) {
      const auto w = w_decomp(lambda, f);
      CHECK(w.mult(lambda) == 1);
      for (const auto& [mu, m] : w.terms) CHECK(contains(lambda, mu));
      const bool trivial = f == Family::sp ? in_Yh(lambda) : in_Yv(lambda);
      CHECK(w.mult(Partition{}) == (trivial ? 1 : 0));
    }
}

TEST_CASE("tensor property") {
  const auto small = w_tensor_check(Partition{1}, Partition{1}, Family::sp);
  CHECK(small.equal());
  CHECK(small.lhs == of(Basis::sp, {{{2}, 1}, {{1, 1}, 1}, {{}, 1}}));
  const auto unit = w_tensor_check(Partition{3, 2, 1}, Partition{}, Family::o);
  CHECK(unit.equal());
  CHECK(unit.lhs == w_decomp(Partition{3, 2, 1}, Family::o).as_expansion());
  for (const auto& mu : partitions_up_to(4))
    for (const auto& nu : partitions_up_to(4 - size(mu)))
      for (Family f : {Family::sp, Family::o}) CHECK(w_tensor_check(mu, nu, f).equal());
}

TEST_CASE("stable ranks") {
  CHECK(min_stable_rank(Partition{2, 1}, StableFamily::sp) == 3);
  CHECK(min_stable_rank(Partition{2, 1}, StableFamily::o_odd) == 3);
  CHECK(min_stable_rank(Partition{1, 1, 1}, StableFamily::o_even) == 5);
  for (auto f : {StableFamily::sp, StableFamily::o_odd, StableFamily::o_even})
    CHECK(min_stable_rank(Partition{}, f) == 1);
}

TEST_CASE("family parsing") {
  CHECK(parse_family("sp") == Family::sp);
  CHECK(parse_family("O") == Family::o);
  CHECK_THROWS_AS(parse_family("gl"), invalid_input);
}
