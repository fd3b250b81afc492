#pragma once

#include <map>
#include <utility>
#include <vector>

#include "egkit/tableau.hpp"
#include "egkit/types.hpp"

namespace egkit {

// Largest letter that can occur in a word whose insertion tableau freezes to
// this shape: the maximum frozen entry max_i(i + shape_i - 1).
int fiber_alphabet_bound(const Partition& shape);

// All words with recording tableau q and frozen insertion tableau, in
// lexicographic order. Exactly one of them is reduced.
std::vector<Word> enumerate_fiber(const Tableau& q, int cell_cap = 12,
                                  int alphabet_override = 0);

/// The componentwise order on the fiber of q, with cover relations taken
/// inside the fiber (a cover may change several coordinates).
struct WordPoset {
  Tableau q;
  std::vector<Word> elements;                    // lexicographic
  std::vector<std::pair<int, int>> covers;       // (lower, upper) indices
  int bottom = -1;                               // index of the column word
  int top = -1;                                  // index of the reduced element
  std::vector<int> maximal_elements;

  int index_of(const Word& w) const;             // -1 when absent
};

WordPoset build_poset(const Tableau& q, int cell_cap = 12);
WordPoset build_poset_from_elements(const Tableau& q, std::vector<Word> elements);

// Longest chain length from bottom to top inside the interval; throws when
// the endpoints are incomparable.
int interval_height(const WordPoset& poset, const Word& bottom, const Word& top);

struct EtaTable {
  int n = 0;
  std::vector<long long> counts;       // counts[i] = #tableaux with height i
  std::map<Tableau, int> height_by_q;  // interval height per staircase tableau
};

// Histogram of interval heights over all staircase recording tableaux.
// n = 6 is expensive and must be requested explicitly.
EtaTable eta_table(int n, bool allow_long_run = false);

// One sweep over all words on the staircase alphabet, grouped by recording
// tableau (keyed by row-major entries). Only words with a fully frozen
// staircase insertion tableau are kept.
std::map<std::vector<int>, std::vector<Word>> staircase_fiber_sweep(int n);

// Weak descents of every fiber element must equal the tableau descents.
Report check_descents(const WordPoset& poset);
Report check_descents(const Tableau& q);
// The column word must be the unique minimal element.
Report check_minimal(const WordPoset& poset);
Report check_minimal(const Tableau& q);
// The reduced element should be maximal, and the interval height should equal
// the coordinatewise gap sum; violations are reported, never thrown.
Report check_height_formula(const WordPoset& poset);
Report check_height_formula(const Tableau& q);
// Transpose complement, evacuation invariance, evenness, and the value of the
// maximal height, over all staircase tableaux of [n].
Report check_eta_consequences(int n, const EtaTable* precomputed = nullptr);

}  // namespace egkit
