#include "egkit/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace egkit {

Tableau::Tableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  validate_partition(shape_);
  offsets_.reserve(shape_.size());
  int offset = 0;
  for (int len : shape_) {
    offsets_.push_back(offset);
    offset += len;
  }
  if (offset != static_cast<int>(entries_.size())) {
    throw std::invalid_argument("entry count does not match shape");
  }
  for (int e : entries_) {
    if (e < 1) throw std::invalid_argument("tableau entries must be >= 1");
  }
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  Partition shape;
  std::vector<int> entries;
  for (const auto& row : rows) {
    shape.push_back(static_cast<int>(row.size()));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Tableau(std::move(shape), std::move(entries));
}

std::vector<std::vector<int>> Tableau::to_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(shape_.size());
  for (int i = 1; i <= rows(); ++i) {
    std::vector<int> row(shape_[i - 1]);
    for (int j = 1; j <= shape_[i - 1]; ++j) row[j - 1] = at(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

bool Tableau::is_increasing() const {
  for (int i = 1; i <= rows(); ++i) {
    for (int j = 1; j <= row_length(i); ++j) {
      if (j > 1 && at(i, j) <= at(i, j - 1)) return false;
      if (i > 1 && j <= row_length(i - 1) && at(i, j) <= at(i - 1, j)) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_increasing()) return false;
  std::vector<bool> seen(entries_.size() + 1, false);
  for (int e : entries_) {
    if (e > static_cast<int>(entries_.size()) || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

Word reading_word(const Tableau& t) {
  Word out;
  out.reserve(t.cells());
  for (int i = t.rows(); i >= 1; --i) {
    for (int j = 1; j <= t.row_length(i); ++j) out.push_back(t.at(i, j));
  }
  return out;
}

Word column_word(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("column word needs a standard tableau");
  Word out(t.cells());
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) out[t.at(i, j) - 1] = j;
  }
  return out;
}

Tableau transpose(const Tableau& t) {
  Partition shape = conjugate_partition(t.shape());
  std::vector<int> entries;
  entries.reserve(t.cells());
  for (size_t i = 1; i <= shape.size(); ++i) {
    for (int j = 1; j <= shape[i - 1]; ++j) {
      entries.push_back(t.at(j, static_cast<int>(i)));
    }
  }
  return Tableau(std::move(shape), std::move(entries));
}

std::vector<int> descent_set(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("descent set needs a standard tableau");
  int m = t.cells();
  std::vector<int> row_of(m + 1, 0);
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) row_of[t.at(i, j)] = i;
  }
  std::vector<int> out;
  for (int k = 1; k < m; ++k) {
    if (row_of[k + 1] > row_of[k]) out.push_back(k);
  }
  return out;
}

namespace {
void require_staircase_standard(const Tableau& t) {
  if (!is_staircase(t.shape())) throw std::invalid_argument("tableau is not staircase-shaped");
  if (!t.is_standard()) throw std::invalid_argument("tableau is not standard");
}
}  // namespace

bool is_shifted_staircase(const Tableau& t) {
  require_staircase_standard(t);
  for (int i = 2; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (j + 1 <= t.row_length(i - 1) && t.at(i, j) <= t.at(i - 1, j + 1)) return false;
    }
  }
  return true;
}

bool is_antidiagonal_increasing(const Tableau& t) {
  require_staircase_standard(t);
  for (int i = 2; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (j + 1 <= t.row_length(i - 1) && t.at(i, j) >= t.at(i - 1, j + 1)) return false;
    }
  }
  return true;
}

bool is_lattice_word(const Word& w, const Partition& type) {
  validate_word(w);
  validate_partition(type);
  int max_letter = 0;
  for (int letter : w) max_letter = std::max(max_letter, letter);
  std::vector<long long> count(std::max<size_t>(max_letter, type.size()) + 2, 0);
  for (int letter : w) {
    count[letter]++;
    if (letter > 1 && count[letter] > count[letter - 1]) return false;
  }
  for (size_t i = 0; i < count.size() - 1; ++i) {
    long long want = i + 1 <= type.size() ? type[i] : 0;
    if (count[i + 1] != want) return false;
  }
  return true;
}

std::vector<Tableau> enumerate_syt(const Partition& shape, int cell_cap) {
  validate_partition(shape);
  int m = partition_cells(shape);
  if (m > cell_cap) throw std::invalid_argument("shape exceeds the enumeration cell cap");
  std::vector<Tableau> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  // Grow by placing k = 1..m in any cell whose west and north neighbors are
  // already filled; every leaf is a distinct standard tableau.
  std::vector<std::vector<int>> grid(shape.size());
  for (size_t i = 0; i < shape.size(); ++i) grid[i].assign(shape[i], 0);
  std::vector<int> fill(shape.size(), 0);  // filled prefix length per row
  auto rec = [&](auto&& self, int k) -> void {
    if (k > m) {
      std::vector<int> entries;
      entries.reserve(m);
      for (const auto& row : grid) entries.insert(entries.end(), row.begin(), row.end());
      out.emplace_back(shape, std::move(entries));
      return;
    }
    for (size_t i = 0; i < shape.size(); ++i) {
      int j = fill[i];
      if (j >= shape[i]) continue;
      if (i > 0 && fill[i - 1] <= j) continue;
      grid[i][j] = k;
      fill[i]++;
      self(self, k + 1);
      fill[i]--;
      grid[i][j] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_syt(const Partition& shape) {
  validate_partition(shape);
  int m = partition_cells(shape);
  Partition conj = conjugate_partition(shape);
  BigInt numer = 1;
  for (int k = 2; k <= m; ++k) numer *= k;
  BigInt denom = 1;
  for (size_t i = 0; i < shape.size(); ++i) {
    for (int j = 1; j <= shape[i]; ++j) {
      int hook = (shape[i] - j) + (conj[j - 1] - static_cast<int>(i) - 1) + 1;
      denom *= hook;
    }
  }
  detail::require(numer % denom == 0, "hook-length formula must divide evenly");
  return numer / denom;
}

}  // namespace egkit
