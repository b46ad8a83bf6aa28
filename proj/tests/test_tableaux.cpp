#include <doctest.h>

#include "lrw/tableaux.hpp"
#include "oracles.hpp"

using namespace lrw;

TEST_CASE("skew shapes") {
  const SkewShape s(Partition{3, 2, 1}, Partition{1, 1});
  CHECK(s.rows() == 3);
  CHECK(s.row_cells(0) == 2);
  CHECK(s.row_cells(1) == 1);
  CHECK(s.row_cells(2) == 1);
  CHECK(s.cell_count() == 4);
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), invalid_input);
}

TEST_CASE("reverse row word reads rows right to left from the top") {
  const SkewTableau t{SkewShape(Partition{3, 2, 1}, Partition{1}), {{1, 1}, {1, 2}, {3}}};
  CHECK(reverse_row_word(t) == std::vector<int>{1, 1, 2, 1, 3});
  CHECK(is_semistandard(t));
  CHECK(content(t) == Partition{3, 1, 1});
  const SkewTableau bad{SkewShape(Partition{2, 2}), {{1, 1}, {1, 2}}};
  CHECK_FALSE(is_semistandard(bad));
}

TEST_CASE("ballot words") {
  const std::vector<int> good{1, 1, 2, 1, 2, 3}, bad{1, 2, 2}, starts_high{2};
  CHECK(is_ballot(good));
  CHECK_FALSE(is_ballot(bad));
  CHECK_FALSE(is_ballot(starts_high));
  CHECK(is_ballot(std::vector<int>{}));
}

TEST_CASE("LR tableau counts on <3,2,1>") {
  const Partition lambda{3, 2, 1};
  CHECK(enumerate_lr_tableaux(SkewShape(lambda)).size() == 1);
  CHECK(enumerate_lr_tableaux(SkewShape(lambda, Partition{1, 1})).size() == 3);
  CHECK(enumerate_lr_tableaux(SkewShape(lambda, Partition{2, 2})).size() == 2);
}

TEST_CASE("every enumerated tableau is a semistandard ballot filling") {
  for (const auto& lambda : partitions_up_to(7))
    for (const auto& mu : partitions_contained_in(lambda))
      for (const auto& t : enumerate_lr_tableaux(SkewShape(lambda, mu))) {
        CHECK(is_semistandard(t));
        CHECK(is_ballot(reverse_row_word(t)));
      }
}

TEST_CASE("single-shape enumeration has the identity filling") {
  const auto ts = enumerate_lr_tableaux(SkewShape(Partition{3, 2}));
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 1, 1}, {2, 2}});
}

TEST_CASE("content-restricted enumeration partitions the full list") {
  const SkewShape shape(Partition{4, 3, 2}, Partition{2, 1});
  std::size_t total = 0;
  for (const auto& nu : partitions_of(shape.cell_count())) total += enumerate_lr_tableaux(shape, nu).size();
  CHECK(total == enumerate_lr_tableaux(shape).size());
}

TEST_CASE("LR coefficients against the polynomial oracle") {
  for (const auto& mu : partitions_up_to(5))
    for (const auto& nu : partitions_up_to(5 - size(mu)))
      for (const auto& lambda : partitions_of(size(mu) + size(nu)))
        CHECK(lr_coefficient(lambda, mu, nu) == oracle::lr(lambda, mu, nu));
}

TEST_CASE("LR coefficient edge cases") {
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(lr_coefficient(Partition{2}, Partition{1, 1}, Partition{}) == 0);
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{2}) == 0);
  CHECK(lr_coefficient(Partition{}, Partition{}, Partition{}) == 1);
}
