#include <doctest.h>

#include "lrw/classical.hpp"
#include "lrw/fermionic.hpp"
#include "oracles.hpp"

using namespace lrw;

namespace {

using Decomp = std::map<DominantWeight, coeff_t>;

DominantWeight w(std::vector<int> c) { return DominantWeight(std::move(c)); }

}  // namespace

TEST_CASE("factor lists") {
  CHECK_THROWS_AS(FactorList({}), invalid_input);
  CHECK_THROWS_AS(FactorList({{0, 1}}), invalid_input);
  const FactorList f({{1, 4}});
  CHECK_THROWS_AS(f.check_against(LieSpec(LieType::B, 3)), invalid_input);
  CHECK(top_weight(LieSpec(LieType::C, 3), FactorList({{2, 1}, {1, 3}})).vec() == std::vector<int>{2, 0, 1});
}

TEST_CASE("alpha coordinates") {
  const LieSpec a2(LieType::A, 2);
  const FactorList adj({{1, 1}, {1, 2}});
  CHECK(alpha_coords(a2, adj, w({1, 1})) == std::vector<int>{0, 0});
  CHECK(alpha_coords(a2, adj, w({0, 0})) == std::vector<int>{1, 1});
  CHECK_FALSE(alpha_coords(a2, adj, w({3, 0})).has_value());
  CHECK_FALSE(alpha_coords(a2, FactorList({{1, 1}}), w({0, 0})).has_value());
  CHECK(alpha_coords(LieSpec(LieType::B, 3), FactorList({{1, 2}}), w({0, 1, 0})) == std::vector<int>{0, 0, 0});
}

TEST_CASE("vacancy numbers") {
  const LieSpec b3(LieType::B, 3);
  const FactorList f({{2, 2}});
  const Configuration empty{{{}, {}, {}}};
  CHECK(vacancy(b3, f, empty, 2, 1) == 1);
  CHECK(vacancy(b3, f, empty, 2, 2) == 2);
  CHECK(vacancy(b3, f, empty, 2, 5) == 2);
  CHECK(vacancy(b3, f, empty, 1, 3) == 0);
  // nu^(2) = <1>: P^(2)_1 = 1 - 2; nodes 1 and 3 each gain min(n, h) = 1
  // (node 3 sees min(n, 2h) across the double bond).
  const Configuration one{{{}, {1}, {}}};
  CHECK(vacancy(b3, f, one, 2, 1) == -1);
  CHECK(vacancy(b3, f, one, 1, 1) == 1);
  CHECK(vacancy(b3, f, one, 3, 1) == 1);
}

TEST_CASE("stable vacancy equals the weight coefficient") {
  const LieSpec c3(LieType::C, 3);
  const FactorList f({{2, 1}});
  const Configuration c{{{1, 1}, {1, 1}, {1}}};
  // top - 2 alpha_1 - 2 alpha_2 - alpha_3 = 0 in C_3.
  for (int k = 1; k <= 3; ++k) CHECK(vacancy(c3, f, c, k, 50) == 0);
}

TEST_CASE("single multiplicities") {
  const LieSpec b3(LieType::B, 3);
  CHECK(fermionic_multiplicity(b3, FactorList({{1, 2}}), w({0, 1, 0})) == 1);
  CHECK(fermionic_multiplicity(b3, FactorList({{1, 2}}), w({0, 0, 0})) == 1);
  CHECK(fermionic_multiplicity(LieSpec(LieType::A, 2), FactorList({{1, 1}, {1, 2}}), w({0, 0})) == 1);
  CHECK(fermionic_multiplicity(LieSpec(LieType::A, 2), FactorList({{1, 1}, {1, 2}}), w({1, 1})) == 1);
  CHECK(fermionic_multiplicity(b3, FactorList({{1, 2}}), w({2, 0, 0})) == 0);
}

TEST_CASE("decompositions") {
  CHECK(fermionic_decomp(LieSpec(LieType::B, 3), FactorList({{1, 2}})) == Decomp{{w({0, 1, 0}), 1}, {w({0, 0, 0}), 1}});
  CHECK(fermionic_decomp(LieSpec(LieType::C, 3), FactorList({{2, 1}})) == Decomp{{w({2, 0, 0}), 1}, {w({0, 0, 0}), 1}});
  CHECK(fermionic_decomp(LieSpec(LieType::B, 3), FactorList({{1, 1}})) == Decomp{{w({1, 0, 0}), 1}});
}

TEST_CASE("top weight has multiplicity one") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
    const LieSpec s(t, 4);
    for (int m = 1; m <= 4; ++m)
      for (int node = 1; node <= 4; ++node) {
        const FactorList f({{m, node}});
        CHECK(fermionic_multiplicity(s, f, top_weight(s, f)) == 1);
      }
    const FactorList pair({{1, 1}, {2, 3}});
    CHECK(fermionic_multiplicity(s, pair, top_weight(s, pair)) == 1);
  }
}

TEST_CASE("type A single factors are irreducible") {
  for (int n = 1; n <= 4; ++n)
    for (int node = 1; node <= n; ++node)
      for (int m = 1; m <= 3; ++m) {
        const LieSpec s(LieType::A, n);
        const FactorList f({{m, node}});
        CHECK(fermionic_decomp(s, f) == Decomp{{top_weight(s, f), 1}});
      }
}

TEST_CASE("type A tensor products of two columns follow the LR rule") {
  // V(omega_a) (x) V(omega_b) for sl_{n+1}: LR product of columns, dropping
  // full columns of height n+1.
  const int n = 3;
  const LieSpec s(LieType::A, n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const Partition ca(std::vector<int>(static_cast<std::size_t>(a), 1));
      const Partition cb(std::vector<int>(static_cast<std::size_t>(b), 1));
      Decomp expected;
      for (const auto& lambda : partitions_of(a + b)) {
        if (lambda.length() > n + 1) continue;
        const auto c = oracle::lr(lambda, ca, cb);
        if (c == 0) continue;
        std::vector<int> coeffs(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) coeffs[static_cast<std::size_t>(k)] = lambda[static_cast<std::size_t>(k)] - lambda[static_cast<std::size_t>(k + 1)];
        expected[w(coeffs)] += c;
      }
      CHECK(fermionic_decomp(s, FactorList({{1, a}, {1, b}})) == expected);
    }
}

TEST_CASE("rectangles agree with the W decomposition") {
  for (LieType t : {LieType::B, LieType::C, LieType::D})
    for (int m = 1; m <= 3; ++m)
      for (int ell = 1; ell <= 3; ++ell) {
        const Partition rect(std::vector<int>(static_cast<std::size_t>(ell), m));
        const StableFamily sf = t == LieType::C ? StableFamily::sp : t == LieType::B ? StableFamily::o_odd : StableFamily::o_even;
        const int rank = std::max(min_stable_rank(rect, sf), t == LieType::D ? 4 : 2);
        Decomp expected;
        for (const auto& [mu, mult] : w_decomp(rect, t == LieType::C ? Family::sp : Family::o).terms)
          expected[weight_from_partition(mu, rank)] = mult;
        CAPTURE(rank);
        CHECK(fermionic_decomp(LieSpec(t, rank), FactorList({{m, ell}})) == expected);
      }
}
