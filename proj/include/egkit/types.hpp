#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace egkit {

// A word is a sequence of letters >= 1; letter i stands for the adjacent
// transposition of positions i and i+1.
using Word = std::vector<int>;

// Weakly decreasing sequence of positive parts.
using Partition = std::vector<int>;

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  auto operator<=>(const Cell&) const = default;
};

// Sorted row-major, no duplicates.
using CellSet = std::vector<Cell>;

namespace detail {
[[noreturn]] void fail_invariant(const std::string& what);
inline void require(bool ok, const char* what) {
  if (!ok) fail_invariant(what);
}
}  // namespace detail

void validate_word(const Word& w);  // throws std::invalid_argument

bool is_partition(const Partition& p);
void validate_partition(const Partition& p);
int partition_cells(const Partition& p);
Partition staircase(int n);  // (n-1, n-2, ..., 1)
bool is_staircase(const Partition& p);
Partition conjugate_partition(const Partition& p);
// inner fits inside outer cell-wise
bool partition_leq(const Partition& inner, const Partition& outer);
std::vector<Partition> subpartitions(const Partition& outer);

// Outcome of a batch verification. Failure messages are capped; the count
// is exact.
struct Report {
  std::string name;
  long long checks = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failure_count == 0; }
  void fail(std::string msg);
  void merge(const Report& other);
};

}  // namespace egkit
