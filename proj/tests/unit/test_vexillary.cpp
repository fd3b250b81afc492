#include <algorithm>
#include <optional>
#include <set>

#include "doctest.h"
#include "egkit/eg.hpp"
#include "egkit/networks.hpp"
#include "egkit/permutation.hpp"
#include "egkit/vexillary.hpp"

using namespace egkit;

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

// Rothe diagrams determine permutations through their column counts; checks
// whether a cell set is the diagram of some vexillary permutation.
bool is_vexillary_diagram(const CellSet& cells) {
  int max_col = 0;
  for (const Cell& c : cells) max_col = std::max(max_col, c.col);
  std::vector<int> code(max_col, 0);
  for (const Cell& c : cells) code[c.col - 1]++;
  int n = 1;
  for (int j = 1; j <= max_col; ++j) n = std::max(n, j + code[j - 1]);
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i + 1;
  std::vector<int> line;
  for (int x = 1; x <= n; ++x) {
    int skip = x <= max_col ? code[x - 1] : 0;
    line.push_back(remaining[skip]);
    remaining.erase(remaining.begin() + skip);
  }
  Permutation candidate(line);
  return rothe_diagram(candidate) == cells && is_vexillary(candidate);
}

}  // namespace

TEST_SUITE_BEGIN("vexillary");

TEST_CASE("column stacks follow the Lehmer code") {
  ColumnStacks stacks = column_stacks(Permutation({8, 1, 3, 9, 7, 5, 2, 4, 6}));
  CHECK(stacks.heights == std::vector<int>{7, 0, 1, 5, 4, 2, 0, 0, 0});
  auto cells = stacks.cells();
  CHECK(cells.front() == std::pair<Cell, int>{{1, 1}, 1});
  CHECK(std::count_if(cells.begin(), cells.end(),
                      [](const auto& cv) { return cv.first.col == 4; }) == 5);

  CHECK(column_stacks(Permutation::identity(5)).cells().empty());
  CHECK(column_stacks(Permutation({3, 2, 1})).heights == std::vector<int>{2, 1, 0});
}

TEST_CASE("left justification yields the worked tableau") {
  Tableau t = vexillary_tableau(Permutation({8, 1, 3, 9, 7, 5, 2, 4, 6}));
  CHECK(t == Tableau::from_rows(
                 {{1, 3, 4, 5, 6}, {2, 5, 6, 7}, {3, 6, 7}, {4, 7, 8}, {5, 8}, {6}, {7}}));
  CHECK(vexillary_tableau(Permutation::reversal(4)) ==
        Tableau::from_rows({{1, 2, 3}, {2, 3}, {3}}));
  CHECK(vexillary_tableau(Permutation::identity(3)).empty());
  CHECK_THROWS_AS(vexillary_tableau(Permutation({2, 1, 4, 3})), std::domain_error);
}

TEST_CASE("the constructed tableau equals every insertion tableau") {
  for (const Permutation& s : symmetric_group(5)) {
    if (!is_vexillary(s)) continue;
    Tableau expected = vexillary_tableau(s);
    for_each_reduced_word(s, [&](const Word& w) {
      CHECK(eg_map(w).p == expected);
      return true;
    });
  }
}

TEST_CASE("diagonal shift map") {
  Tableau frozen = Tableau::from_rows({{1, 2, 3}, {2, 3}, {3}});
  CellSet as_cells;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j + i <= 4; ++j) as_cells.push_back({i, j});
  }
  std::sort(as_cells.begin(), as_cells.end());
  CHECK(tableau_to_diagram(frozen) == as_cells);

  Permutation example({8, 1, 3, 9, 7, 5, 2, 4, 6});
  CHECK(tableau_to_diagram(vexillary_tableau(example)) == rothe_diagram(example));
}

TEST_CASE("entries without shift are exactly the frozen region") {
  for (const Permutation& s : symmetric_group(4)) {
    for_each_reduced_word(s, [&](const Word& w) {
      Tableau p = eg_map(w).p;
      Partition frozen = frozen_region(p);
      for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.row_length(i); ++j) {
          bool unshifted = p.at(i, j) == i + j - 1;
          bool in_frozen = i <= static_cast<int>(frozen.size()) && j <= frozen[i - 1];
          CHECK(unshifted == in_frozen);
        }
      }
      return true;
    });
  }
}

TEST_CASE("verification passes on the worked example and identity") {
  CHECK(verify_vexillary_correspondence(Permutation({8, 1, 3, 9, 7, 5, 2, 4, 6})).ok());
  CHECK(verify_vexillary_correspondence(Permutation::identity(4)).ok());
  CHECK_THROWS_AS(verify_vexillary_correspondence(Permutation({2, 1, 4, 3})),
                  std::invalid_argument);
  for (const Permutation& s : symmetric_group(5)) {
    if (is_vexillary(s)) CHECK(verify_vexillary_correspondence(s).ok());
  }
}

TEST_CASE("non-vexillary words never map onto vexillary diagrams") {
  for (const Permutation& s : symmetric_group(5)) {
    bool vex = is_vexillary(s);
    for_each_reduced_word(s, [&](const Word& w) {
      CellSet mapped = tableau_to_diagram(eg_map(w).p);
      if (vex) {
        CHECK(mapped == rothe_diagram(s));
      } else {
        CHECK_FALSE(is_vexillary_diagram(mapped));
      }
      return true;
    });
  }
}

TEST_SUITE_END();
