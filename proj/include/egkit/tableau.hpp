#pragma once

#include <vector>

#include "egkit/bigint.hpp"
#include "egkit/types.hpp"

namespace egkit {

/// Partition-shaped filling with row-major entry storage.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Partition shape, std::vector<int> entries);
  static Tableau from_rows(const std::vector<std::vector<int>>& rows);

  const Partition& shape() const { return shape_; }
  int rows() const { return static_cast<int>(shape_.size()); }
  int row_length(int i) const { return shape_[i - 1]; }
  int cells() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int at(int i, int j) const { return entries_[offsets_[i - 1] + j - 1]; }
  const std::vector<int>& entries() const { return entries_; }
  std::vector<std::vector<int>> to_rows() const;

  // Entries 1..m each once, rows and columns strictly increasing.
  bool is_standard() const;
  // Rows and columns strictly increasing, repeats allowed across the tableau.
  bool is_increasing() const;

  bool operator==(const Tableau& other) const {
    return shape_ == other.shape_ && entries_ == other.entries_;
  }
  bool operator<(const Tableau& other) const {
    if (shape_ != other.shape_) return shape_ < other.shape_;
    return entries_ < other.entries_;
  }

 private:
  Partition shape_;
  std::vector<int> offsets_;
  std::vector<int> entries_;
};

// Rows bottom to top, each left to right.
Word reading_word(const Tableau& t);
// Letter i is the column of entry i; requires a standard tableau.
Word column_word(const Tableau& t);
Tableau transpose(const Tableau& t);
// Entries k whose successor k+1 sits strictly below; requires standard.
std::vector<int> descent_set(const Tableau& t);

// Both require a standard tableau of staircase shape.
bool is_shifted_staircase(const Tableau& t);        // t(i,j) > t(i-1,j+1) everywhere
bool is_antidiagonal_increasing(const Tableau& t);  // t(i,j) < t(i-1,j+1) everywhere

// Every prefix has at least as many letters i as i+1, and letter i occurs
// type[i-1] times in total.
bool is_lattice_word(const Word& w, const Partition& type);

// All standard fillings in row-major lexicographic order.
std::vector<Tableau> enumerate_syt(const Partition& shape, int cell_cap = 12);
// Hook-length formula, exact.
BigInt count_syt(const Partition& shape);

}  // namespace egkit
