#include <random>

#include "doctest.h"
#include "egkit/io.hpp"
#include "egkit/networks.hpp"

using namespace egkit;

TEST_SUITE_BEGIN("io");

TEST_CASE("word parsing accepts digits, spaces, and commas") {
  CHECK(parse_word("321232") == Word{3, 2, 1, 2, 3, 2});
  CHECK(parse_word("3 2 1 2 3 2") == Word{3, 2, 1, 2, 3, 2});
  CHECK(parse_word("3,2,1,2,3,2") == Word{3, 2, 1, 2, 3, 2});
  CHECK(parse_word("12 11") == Word{12, 11});
  CHECK(parse_word("7") == Word{7});
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("102"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("-1 2"), std::invalid_argument);
}

TEST_CASE("word printing round-trips") {
  for (const Word& w : {Word{3, 2, 1, 2, 3, 2}, Word{12, 3}, Word{}}) {
    CHECK(parse_word(word_to_string(w)) == w);
  }
  CHECK(word_to_string({3, 2, 1}) == "321");
  CHECK(word_to_string({10, 2}) == "10 2");
}

TEST_CASE("permutation parsing") {
  CHECK(parse_permutation("561423").one_line() == std::vector<int>{5, 6, 1, 4, 2, 3});
  CHECK(parse_permutation("5 6 1 4 2 3").one_line() == std::vector<int>{5, 6, 1, 4, 2, 3});
  CHECK_THROWS_AS(parse_permutation("1 1 2"), std::invalid_argument);
  CHECK(parse_permutation(permutation_to_string(Permutation({2, 1, 3}))).one_line() ==
        std::vector<int>{2, 1, 3});
}

TEST_CASE("tableau json round-trips") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Tableau t = random_syt(Partition{4, 3, 1}, rng);
    CHECK(tableau_from_json(tableau_to_json(t)) == t);
  }
  Json j = Json::parse(R"({"shape": [2, 1], "rows": [[1, 2], [3]]})");
  CHECK(tableau_from_json(j) == Tableau::from_rows({{1, 2}, {3}}));
  Json mismatched = Json::parse(R"({"shape": [3], "rows": [[1, 2], [3]]})");
  CHECK_THROWS_AS(tableau_from_json(mismatched), std::invalid_argument);
  CHECK_THROWS_AS(tableau_from_json(Json::parse("[1, 2]")), std::invalid_argument);
}

TEST_CASE("cell set json is row-major sorted") {
  CellSet cells{{1, 1}, {1, 2}, {2, 1}};
  CHECK(cellset_from_json(cellset_to_json(cells)) == cells);
  CHECK(cellset_from_json(Json::parse("[[2,1],[1,1],[1,2]]")) == cells);
  CHECK_THROWS_AS(cellset_from_json(Json::parse("[[1,1],[1,1]]")), std::invalid_argument);
  CHECK_THROWS_AS(cellset_from_json(Json::parse("[[0,1]]")), std::invalid_argument);
}

TEST_CASE("partial tableau json keeps empties as null") {
  Json j = Json::parse(R"({"rows": [[null, 1, 5], [2, 4], [3]]})");
  PartialTableau t = partial_tableau_from_json(j);
  CHECK(t.label_count() == 5);
  CHECK_FALSE(t.has_label(1, 1));
  CHECK(t.label_at(1, 3) == 5);
  CHECK(partial_tableau_from_json(partial_tableau_to_json(t)) == t);
}

TEST_CASE("grids stay aligned") {
  std::string grid = tableau_to_grid(Tableau::from_rows({{1, 2, 10}, {3, 11}}));
  CHECK(grid == " 1  2 10\n 3 11\n");
  CHECK(cellset_to_grid({{1, 1}, {2, 2}}, 2, 2) == "X.\n.X\n");
}

TEST_SUITE_END();
