#pragma once

#include <vector>

#include "egkit/permutation.hpp"
#include "egkit/tableau.hpp"
#include "egkit/types.hpp"

namespace egkit {

/// Vertical runs of consecutive values: column x, when present, holds
/// x, x+1, ..., x + height - 1 where height is the Lehmer code entry r_x.
struct ColumnStacks {
  std::vector<int> heights;  // heights[x-1] for column x

  int height(int x) const { return heights[x - 1]; }
  int columns() const { return static_cast<int>(heights.size()); }
  // Occupied cells with their values, row-major.
  std::vector<std::pair<Cell, int>> cells() const;
};

ColumnStacks column_stacks(const Permutation& s);

// Left-justifies the rows of the column stacks. Only vexillary permutations
// are guaranteed to produce an increasing tableau; anything else throws.
Tableau vexillary_tableau(const Permutation& s);

// Sends cell (i, j) with entry (i + j - 1) + k to (i + k, j + k). Injective
// on increasing tableaux.
CellSet tableau_to_diagram(const Tableau& p);

// Over the reduced words of a vexillary permutation, the mapped insertion
// tableau must reproduce the Rothe diagram with ranks matching the shifts.
Report verify_vexillary_correspondence(const Permutation& s, long long word_cap = 500000);

}  // namespace egkit
