#include "egkit/permutation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace egkit {

Permutation::Permutation(std::vector<int> one_line) : perm_(std::move(one_line)) {
  int n = static_cast<int>(perm_.size());
  inv_.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    int v = perm_[i - 1];
    if (v < 1 || v > n) throw std::invalid_argument("one-line entry out of range");
    if (inv_[v - 1] != 0) throw std::invalid_argument("one-line entry repeated");
    inv_[v - 1] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const { return Permutation(inv_); }

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (perm_[i - 1] != i) return false;
  }
  return true;
}

Permutation compose_word(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  validate_word(w);
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  for (int letter : w) {
    if (letter >= n) throw std::invalid_argument("word letter must be <= n - 1");
    std::swap(line[letter - 1], line[letter]);
  }
  return Permutation(std::move(line));
}

std::vector<std::pair<int, int>> inversions(const Permutation& s) {
  std::vector<std::pair<int, int>> out;
  int n = s.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (s(i) > s(j)) out.emplace_back(i, j);
    }
  }
  return out;
}

long long inversion_count(const Permutation& s) {
  long long count = 0;
  int n = s.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (s(i) > s(j)) ++count;
    }
  }
  return count;
}

bool is_reduced(const Word& w, int n) {
  return static_cast<long long>(w.size()) == inversion_count(compose_word(w, n));
}

bool weak_bruhat_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  int n = a.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (a(i) > a(j) && b(i) < b(j)) return false;
    }
  }
  return true;
}

CellSet rothe_diagram(const Permutation& s) {
  CellSet out;
  int n = s.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (s(j) > i && s.inverse_at(i) > j) out.push_back({i, j});
    }
  }
  return out;
}

Partition top_left_component(const CellSet& diagram) {
  std::set<Cell> cells(diagram.begin(), diagram.end());
  if (!cells.count({1, 1})) return {};
  std::set<Cell> seen;
  std::queue<Cell> queue;
  queue.push({1, 1});
  seen.insert({1, 1});
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop();
    const Cell neighbors[4] = {{c.row - 1, c.col}, {c.row + 1, c.col},
                               {c.row, c.col - 1}, {c.row, c.col + 1}};
    for (const Cell& nb : neighbors) {
      if (cells.count(nb) && !seen.count(nb)) {
        seen.insert(nb);
        queue.push(nb);
      }
    }
  }
  int num_rows = 0;
  for (const Cell& c : seen) num_rows = std::max(num_rows, c.row);
  Partition shape(num_rows, 0);
  for (const Cell& c : seen) shape[c.row - 1]++;
  // The component of (1, 1) in a Rothe diagram is always top- and
  // left-justified with weakly decreasing rows.
  detail::require(is_partition(shape), "top-left component is not a Young diagram");
  for (const Cell& c : seen) {
    detail::require(c.col <= shape[c.row - 1], "top-left component has a row gap");
  }
  return shape;
}

std::vector<int> lehmer_code(const Permutation& s) {
  int n = s.size();
  std::vector<int> code(n, 0);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (s(y) < s(x)) code[x - 1]++;
    }
  }
  return code;
}

int nw_rank(const Permutation& s, int i, int j) {
  int n = s.size();
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("rank cell out of range");
  int count = 0;
  for (int x = 1; x <= j; ++x) {
    if (s(x) <= i) ++count;
  }
  return count;
}

namespace {
bool pattern_search(const Permutation& s, const std::vector<int>& pattern,
                    std::vector<int>& chosen, int next_index) {
  int k = static_cast<int>(pattern.size());
  int picked = static_cast<int>(chosen.size());
  if (picked == k) return true;
  int n = s.size();
  // Still need k - picked positions to the right.
  for (int i = next_index; i + (k - picked) <= n + 1; ++i) {
    bool fits = true;
    for (int a = 0; a < picked && fits; ++a) {
      bool want = pattern[a] < pattern[picked];
      bool have = s(chosen[a]) < s(i);
      if (want != have) fits = false;
    }
    if (!fits) continue;
    chosen.push_back(i);
    if (pattern_search(s, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}
}  // namespace

bool contains_pattern(const Permutation& s, const std::vector<int>& pattern) {
  Permutation p(pattern);  // validates that the pattern is a permutation of [k]
  if (p.size() > s.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return pattern_search(s, pattern, chosen, 1);
}

bool avoids_pattern(const Permutation& s, const std::vector<int>& pattern) {
  return !contains_pattern(s, pattern);
}

bool avoids_132(const Permutation& s) { return avoids_pattern(s, {1, 3, 2}); }
bool avoids_213(const Permutation& s) { return avoids_pattern(s, {2, 1, 3}); }
bool is_vexillary(const Permutation& s) { return avoids_pattern(s, {2, 1, 4, 3}); }

Word reverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word complement_word(const Word& w, int n) {
  validate_word(w);
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter >= n) throw std::invalid_argument("complement needs letters < n");
    out.push_back(n - letter);
  }
  return out;
}

}  // namespace egkit
