#pragma once

#include <vector>

#include "egkit/tableau.hpp"
#include "egkit/types.hpp"

namespace egkit {

/// Partially labeled Young diagram; labels are 1..max, each exactly once,
/// increasing along labeled rows and columns. Unlabeled cells read as 0.
class PartialTableau {
 public:
  PartialTableau() = default;
  explicit PartialTableau(Partition shape);
  explicit PartialTableau(const Tableau& standard);
  // Sparse labels, 0 meaning empty; validates the partial-tableau invariants.
  PartialTableau(Partition shape, std::vector<std::vector<int>> labels);

  const Partition& shape() const { return shape_; }
  int rows() const { return static_cast<int>(shape_.size()); }
  int row_length(int i) const { return shape_[i - 1]; }
  int label_at(int i, int j) const { return labels_[i - 1][j - 1]; }
  bool has_label(int i, int j) const { return label_at(i, j) != 0; }
  int label_count() const { return label_count_; }
  int max_label() const { return max_label_; }
  std::vector<std::vector<int>> to_rows() const { return labels_; }

  bool operator==(const PartialTableau& other) const {
    return shape_ == other.shape_ && labels_ == other.labels_;
  }

 private:
  friend struct PromoteAccess;
  Partition shape_;
  std::vector<std::vector<int>> labels_;
  int label_count_ = 0;
  int max_label_ = 0;
};

// Path from the largest label toward the upper-left, each step moving to the
// larger of the west and north labels.
std::vector<Cell> evacuation_path(const PartialTableau& t);

struct PromoteResult {
  PartialTableau tableau;
  Cell start;           // where the removed label sat
  Cell cleared;         // the cell left empty
  int right_slides = 0;
  int down_slides = 0;
};

// One elementary promotion: remove the largest label and slide along the
// evacuation path.
PromoteResult promote(const PartialTableau& t);

// Records, per cell, the promotion iteration at which it empties.
Tableau evacuation(const Tableau& standard);

struct ClearingRun {
  Word start_columns;         // column of the path start, per iteration
  Tableau evacuation_record;  // standard, same shape as the input
  long long right_slides = 0;
  long long down_slides = 0;
};

// Applies promotion until all labels are gone.
ClearingRun clearing_run(const Tableau& standard);

// Inverse of the insertion correspondence for staircase recording tableaux:
// read the start columns of the clearing run in reverse.
Word eg_inverse(const Tableau& q);

// Right slides over the whole clearing run; staircase only.
long long right_slide_total(const Tableau& q);

}  // namespace egkit
