#include <set>

#include "doctest.h"
#include "egkit/tableau.hpp"

using namespace egkit;

TEST_SUITE_BEGIN("tableau");

TEST_CASE("construction validates shape and entries") {
  CHECK_THROWS_AS(Tableau(Partition{1, 2}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Tableau(Partition{2}, {1}), std::invalid_argument);
  Tableau t = Tableau::from_rows({{1, 2, 3}, {2, 3}, {3}});
  CHECK(t.at(2, 2) == 3);
  CHECK(t.shape() == Partition{3, 2, 1});
  CHECK(t.is_increasing());
  CHECK_FALSE(t.is_standard());
  CHECK(Tableau::from_rows({{1, 4, 5}, {2, 6}, {3}}).is_standard());
  CHECK(Tableau::from_rows({{1, 3}, {2, 4}}).is_increasing());
  CHECK_FALSE(Tableau::from_rows({{2, 2}}).is_increasing());
}

TEST_CASE("reading word goes bottom-up, left to right") {
  CHECK(reading_word(Tableau::from_rows({{1, 2, 3}, {2, 3}, {3}})) == Word{3, 2, 3, 1, 2, 3});
  CHECK(reading_word(Tableau::from_rows({{1, 2, 3}})) == Word{1, 2, 3});
  CHECK(reading_word(Tableau::from_rows({{1, 2, 4}, {2, 3, 5}, {3, 4}, {4, 5}})) ==
        Word{4, 5, 3, 4, 2, 3, 5, 1, 2, 4});
}

TEST_CASE("column word lists the column of each entry") {
  CHECK(column_word(Tableau::from_rows({{1, 2, 4}, {3, 5}, {6}})) == Word{1, 2, 1, 3, 2, 1});
  CHECK(column_word(Tableau::from_rows({{1}, {2}, {3}})) == Word{1, 1, 1});
  CHECK(column_word(Tableau::from_rows({{1, 4, 5}, {2, 6}, {3}})) == Word{1, 1, 1, 2, 3, 2});
  CHECK_THROWS_AS(column_word(Tableau::from_rows({{1, 2, 3}, {2, 3}, {3}})),
                  std::invalid_argument);
}

TEST_CASE("transpose reflects across the diagonal") {
  Tableau t = Tableau::from_rows({{1, 2, 3}, {2, 3}, {3}});
  CHECK(transpose(transpose(t)) == t);
  CHECK(transpose(Tableau::from_rows({{1, 4, 5}, {2, 6}, {3}})) ==
        Tableau::from_rows({{1, 2, 3}, {4, 6}, {5}}));
}

TEST_CASE("descents are entries whose successor sits lower") {
  CHECK(descent_set(Tableau::from_rows({{1, 4, 5}, {2, 6}, {3}})) == std::vector<int>{1, 2, 5});
  CHECK(descent_set(Tableau::from_rows({{1, 2, 3}})).empty());
}

TEST_CASE("staircase descent sets complement under transposition") {
  for (int n = 3; n <= 5; ++n) {
    for (const Tableau& q : enumerate_syt(staircase(n))) {
      std::set<int> descents(descent_set(q).begin(), descent_set(q).end());
      std::set<int> flipped(descent_set(transpose(q)).begin(), descent_set(transpose(q)).end());
      for (int k = 1; k < q.cells(); ++k) {
        CHECK(descents.count(k) + flipped.count(k) == 1);
      }
    }
  }
}

TEST_CASE("shifted and antidiagonal staircase conditions") {
  CHECK(is_shifted_staircase(Tableau::from_rows({{1, 2, 4}, {3, 5}, {6}})));
  CHECK_FALSE(is_shifted_staircase(Tableau::from_rows({{1, 4, 5}, {2, 6}, {3}})));
  CHECK_FALSE(is_antidiagonal_increasing(Tableau::from_rows({{1, 2, 3}, {4, 5}, {6}})));
  CHECK(is_antidiagonal_increasing(Tableau::from_rows({{1, 3, 6}, {2, 5}, {4}})));
  CHECK_THROWS_AS(is_shifted_staircase(Tableau::from_rows({{1, 2}, {3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("lattice word check") {
  CHECK(is_lattice_word({1, 2, 1, 3, 2, 1}, staircase(4)));
  CHECK_FALSE(is_lattice_word({2, 1, 1, 1, 2, 3}, staircase(4)));
  CHECK(is_lattice_word({1, 1, 1, 2, 3, 2}, staircase(4)));
  CHECK_FALSE(is_lattice_word({1, 1, 1}, staircase(4)));
}

TEST_CASE("column words are lattice words of the conjugate type") {
  for (const Partition& shape : subpartitions(staircase(5))) {
    if (shape.empty()) continue;
    for (const Tableau& q : enumerate_syt(shape)) {
      CHECK(is_lattice_word(column_word(q), conjugate_partition(shape)));
    }
  }
}

TEST_CASE("enumeration is lexicographic and matches the hook count") {
  auto sc3 = enumerate_syt(staircase(3));
  REQUIRE(sc3.size() == 2);
  CHECK(sc3[0] == Tableau::from_rows({{1, 2}, {3}}));
  CHECK(sc3[1] == Tableau::from_rows({{1, 3}, {2}}));
  CHECK(count_syt(staircase(3)) == 2);
  CHECK(count_syt(staircase(4)) == 16);
  CHECK(count_syt(staircase(5)) == 768);
  for (const Partition& shape : subpartitions(staircase(5))) {
    auto all = enumerate_syt(shape);
    CHECK(BigInt(all.size()) == count_syt(shape));
    std::set<Tableau> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_syt(Partition{7, 6}), std::invalid_argument);
}

TEST_CASE("hook counts stay exact past 64 bits") {
  // 30 cells: (30)! alone would overflow any machine word.
  Partition shape{10, 10, 10};
  CHECK(count_syt(shape) > BigInt("1000000000000"));
}

TEST_SUITE_END();
