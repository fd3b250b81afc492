#include "egkit/types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace egkit {

namespace detail {
void fail_invariant(const std::string& what) {
  throw std::logic_error("internal invariant violated: " + what);
}
}  // namespace detail

void validate_word(const Word& w) {
  for (int letter : w) {
    if (letter < 1) throw std::invalid_argument("word letters must be >= 1");
  }
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

void validate_partition(const Partition& p) {
  if (!is_partition(p)) {
    throw std::invalid_argument("parts must be positive and weakly decreasing");
  }
}

int partition_cells(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

Partition staircase(int n) {
  if (n < 1) throw std::invalid_argument("staircase requires n >= 1");
  Partition p;
  for (int k = n - 1; k >= 1; --k) p.push_back(k);
  return p;
}

bool is_staircase(const Partition& p) {
  if (p.empty()) return false;
  int n = static_cast<int>(p.size()) + 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] != n - 1 - static_cast<int>(i)) return false;
  }
  return true;
}

Partition conjugate_partition(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  out.resize(p[0], 0);
  for (int part : p) {
    for (int j = 0; j < part; ++j) out[j]++;
  }
  return out;
}

bool partition_leq(const Partition& inner, const Partition& outer) {
  if (inner.size() > outer.size()) return false;
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

std::vector<Partition> subpartitions(const Partition& outer) {
  validate_partition(outer);
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, size_t row, int prev) -> void {
    out.push_back(cur);
    if (row >= outer.size()) return;
    int hi = std::min(outer[row], prev);
    for (int len = hi; len >= 1; --len) {
      cur.push_back(len);
      self(self, row + 1, len);
      cur.pop_back();
    }
  };
  rec(rec, 0, outer.empty() ? 0 : outer[0]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
constexpr size_t kMaxStoredFailures = 16;
}

void Report::fail(std::string msg) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(msg));
}

void Report::merge(const Report& other) {
  checks += other.checks;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() >= kMaxStoredFailures) break;
    failures.push_back(f);
  }
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace egkit
