#pragma once

#include <utility>
#include <vector>

#include "egkit/tableau.hpp"
#include "egkit/types.hpp"

namespace egkit {

/// Incremental insertion state: P grows letter by letter, Q records the cell
/// added at each step. P and Q always share their shape.
class InsertionState {
 public:
  // Inserts one letter and returns the cell it created.
  Cell insert(int letter);
  int step() const { return step_; }
  const std::vector<std::vector<int>>& p_rows() const { return p_; }
  Tableau insertion_tableau() const;
  Tableau recording_tableau() const;

 private:
  std::vector<std::vector<int>> p_;
  std::vector<std::vector<int>> q_;
  int step_ = 0;
};

struct EgPair {
  Tableau p;
  Tableau q;
};

// One insertion into an increasing tableau; returns the result and the cell
// added. The result is increasing again, also for repeated letters.
std::pair<Tableau, Cell> eg_insert_letter(const Tableau& p, int letter);

EgPair eg_map(const Word& w);

// Cells with entry i + j - 1; they form a top-left justified Young diagram.
Partition frozen_region(const Tableau& p);
Partition frozen_region(const std::vector<std::vector<int>>& p_rows);
bool is_frozen(const Tableau& p);

struct TraceStep {
  Tableau p;
  Partition frozen;
};
std::vector<TraceStep> insertion_trace(const Word& w);

// For each reduced prefix, the frozen region of the insertion tableau must
// match the top-left component of the prefix permutation's diagram.
Report verify_frozen_equals_diagram(const Word& w, int n);

// Reversal transposes P and evacuates Q; for sorting networks the letter
// complement transposes Q.
Report verify_symmetries(const Word& w, int n);

}  // namespace egkit
