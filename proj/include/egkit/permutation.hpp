#pragma once

#include <utility>
#include <vector>

#include "egkit/types.hpp"

namespace egkit {

/// A permutation of [n] in one-line notation, 1-indexed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation reversal(int n);  // n (n-1) ... 2 1

  int size() const { return static_cast<int>(perm_.size()); }
  int operator()(int i) const { return perm_[i - 1]; }
  int inverse_at(int value) const { return inv_[value - 1]; }
  Permutation inverse() const;
  const std::vector<int>& one_line() const { return perm_; }
  bool is_identity() const;

  bool operator==(const Permutation& other) const { return perm_ == other.perm_; }
  bool operator<(const Permutation& other) const { return perm_ < other.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> inv_;
};

// Applies s_{w_1} ... s_{w_m} to the identity, each letter swapping two
// adjacent positions of the one-line word.
Permutation compose_word(const Word& w, int n);

std::vector<std::pair<int, int>> inversions(const Permutation& s);
long long inversion_count(const Permutation& s);
bool is_reduced(const Word& w, int n);
bool weak_bruhat_leq(const Permutation& a, const Permutation& b);

// Cells (i, j) with s(j) > i and s^{-1}(i) > j; |D(s)| = inv(s).
CellSet rothe_diagram(const Permutation& s);
// Shape of the 4-adjacency connected component containing (1, 1).
Partition top_left_component(const CellSet& diagram);

std::vector<int> lehmer_code(const Permutation& s);
// Number of non-zero matrix entries weakly north-west of (i, j), with the
// matrix convention that column j holds its 1 in row s(j).
int nw_rank(const Permutation& s, int i, int j);

bool contains_pattern(const Permutation& s, const std::vector<int>& pattern);
bool avoids_pattern(const Permutation& s, const std::vector<int>& pattern);
bool avoids_132(const Permutation& s);
bool avoids_213(const Permutation& s);
bool is_vexillary(const Permutation& s);  // 2143-avoiding

Word reverse_word(Word w);
Word complement_word(const Word& w, int n);  // letter i -> n - i

}  // namespace egkit
