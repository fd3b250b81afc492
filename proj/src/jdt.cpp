#include "egkit/jdt.hpp"

#include <algorithm>
#include <stdexcept>

namespace egkit {

PartialTableau::PartialTableau(Partition shape) : shape_(std::move(shape)) {
  validate_partition(shape_);
  labels_.resize(shape_.size());
  for (size_t i = 0; i < shape_.size(); ++i) labels_[i].assign(shape_[i], 0);
}

PartialTableau::PartialTableau(const Tableau& standard) : PartialTableau(standard.shape()) {
  if (!standard.is_standard()) throw std::invalid_argument("expected a standard tableau");
  for (int i = 1; i <= standard.rows(); ++i) {
    for (int j = 1; j <= standard.row_length(i); ++j) labels_[i - 1][j - 1] = standard.at(i, j);
  }
  label_count_ = standard.cells();
  max_label_ = standard.cells();
}

PartialTableau::PartialTableau(Partition shape, std::vector<std::vector<int>> labels)
    : PartialTableau(std::move(shape)) {
  if (labels.size() != labels_.size()) throw std::invalid_argument("label rows do not match shape");
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].size() != labels_[i].size()) {
      throw std::invalid_argument("label rows do not match shape");
    }
  }
  labels_ = std::move(labels);
  std::vector<int> seen;
  for (const auto& row : labels_) {
    for (int v : row) {
      if (v < 0) throw std::invalid_argument("labels must be positive (0 for empty)");
      if (v > 0) seen.push_back(v);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (size_t k = 0; k < seen.size(); ++k) {
    if (seen[k] != static_cast<int>(k) + 1) {
      throw std::invalid_argument("labels must be 1..max, each exactly once");
    }
  }
  label_count_ = static_cast<int>(seen.size());
  max_label_ = label_count_;
  // Empty cells behave as minus infinity: they must precede the labels in
  // every row and column, and labels must increase.
  for (int i = 1; i <= rows(); ++i) {
    for (int j = 2; j <= row_length(i); ++j) {
      int prev = label_at(i, j - 1);
      if (prev != 0 && (label_at(i, j) == 0 || label_at(i, j) <= prev)) {
        throw std::invalid_argument("rows must increase with empties first");
      }
    }
  }
  for (int i = 2; i <= rows(); ++i) {
    for (int j = 1; j <= row_length(i); ++j) {
      int above = label_at(i - 1, j);
      if (above != 0 && (label_at(i, j) == 0 || label_at(i, j) <= above)) {
        throw std::invalid_argument("columns must increase with empties first");
      }
    }
  }
}

struct PromoteAccess {
  static PromoteResult run(const PartialTableau& t) {
    if (t.label_count() == 0) throw std::invalid_argument("promotion needs at least one label");
    PromoteResult out;
    out.tableau = t;
    auto& labels = out.tableau.labels_;
    Cell cur{0, 0};
    for (int i = 1; i <= t.rows() && cur.row == 0; ++i) {
      for (int j = 1; j <= t.row_length(i); ++j) {
        if (labels[i - 1][j - 1] == t.max_label()) {
          cur = {i, j};
          break;
        }
      }
    }
    detail::require(cur.row != 0, "largest label not found");
    out.start = cur;
    labels[cur.row - 1][cur.col - 1] = 0;
    while (true) {
      int west = cur.col > 1 ? labels[cur.row - 1][cur.col - 2] : 0;
      int north = cur.row > 1 ? labels[cur.row - 2][cur.col - 1] : 0;
      if (west == 0 && north == 0) break;
      detail::require(west != north, "west and north labels must differ");
      if (west > north) {
        labels[cur.row - 1][cur.col - 1] = west;
        out.right_slides++;
        cur = {cur.row, cur.col - 1};
      } else {
        labels[cur.row - 1][cur.col - 1] = north;
        out.down_slides++;
        cur = {cur.row - 1, cur.col};
      }
      labels[cur.row - 1][cur.col - 1] = 0;
    }
    out.cleared = cur;
    out.tableau.label_count_--;
    out.tableau.max_label_--;
    return out;
  }
};

std::vector<Cell> evacuation_path(const PartialTableau& t) {
  if (t.label_count() == 0) throw std::invalid_argument("evacuation path needs at least one label");
  Cell cur{0, 0};
  for (int i = 1; i <= t.rows() && cur.row == 0; ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (t.label_at(i, j) == t.max_label()) {
        cur = {i, j};
        break;
      }
    }
  }
  detail::require(cur.row != 0, "largest label not found");
  std::vector<Cell> path{cur};
  // The path only moves west or north, so visited cells are never among the
  // neighbors inspected next; reading the unmodified labels is safe.
  while (true) {
    int west = cur.col > 1 ? t.label_at(cur.row, cur.col - 1) : 0;
    int north = cur.row > 1 ? t.label_at(cur.row - 1, cur.col) : 0;
    if (west == 0 && north == 0) break;
    detail::require(west != north, "west and north labels must differ");
    cur = west > north ? Cell{cur.row, cur.col - 1} : Cell{cur.row - 1, cur.col};
    path.push_back(cur);
  }
  return path;
}

PromoteResult promote(const PartialTableau& t) { return PromoteAccess::run(t); }

ClearingRun clearing_run(const Tableau& standard) {
  if (!standard.is_standard()) throw std::invalid_argument("clearing run needs a standard tableau");
  ClearingRun out;
  int m = standard.cells();
  auto labels = standard.to_rows();
  std::vector<Cell> pos(m + 1);
  for (int i = 1; i <= standard.rows(); ++i) {
    for (int j = 1; j <= standard.row_length(i); ++j) pos[standard.at(i, j)] = {i, j};
  }
  std::vector<std::vector<int>> record(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) record[i].assign(labels[i].size(), 0);
  out.start_columns.reserve(m);
  for (int k = m; k >= 1; --k) {
    Cell cur = pos[k];
    out.start_columns.push_back(cur.col);
    labels[cur.row - 1][cur.col - 1] = 0;
    while (true) {
      int west = cur.col > 1 ? labels[cur.row - 1][cur.col - 2] : 0;
      int north = cur.row > 1 ? labels[cur.row - 2][cur.col - 1] : 0;
      if (west == 0 && north == 0) break;
      detail::require(west != north, "west and north labels must differ");
      if (west > north) {
        labels[cur.row - 1][cur.col - 1] = west;
        pos[west] = cur;
        out.right_slides++;
        cur = {cur.row, cur.col - 1};
      } else {
        labels[cur.row - 1][cur.col - 1] = north;
        pos[north] = cur;
        out.down_slides++;
        cur = {cur.row - 1, cur.col};
      }
      labels[cur.row - 1][cur.col - 1] = 0;
    }
    record[cur.row - 1][cur.col - 1] = m - k + 1;
  }
  out.evacuation_record = Tableau::from_rows(record);
  detail::require(out.evacuation_record.is_standard(), "evacuation record must be standard");
  return out;
}

Tableau evacuation(const Tableau& standard) { return clearing_run(standard).evacuation_record; }

Word eg_inverse(const Tableau& q) {
  if (!is_staircase(q.shape())) throw std::invalid_argument("inverse needs a staircase tableau");
  Word w = clearing_run(q).start_columns;
  std::reverse(w.begin(), w.end());
  return w;
}

long long right_slide_total(const Tableau& q) {
  if (!is_staircase(q.shape())) throw std::invalid_argument("slide count needs a staircase tableau");
  return clearing_run(q).right_slides;
}

}  // namespace egkit
