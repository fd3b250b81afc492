#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "egkit/bigint.hpp"
#include "egkit/permutation.hpp"
#include "egkit/tableau.hpp"
#include "egkit/types.hpp"

namespace egkit {

namespace detail {
// Uniform integer in [0, n); unbiased and reproducible across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    std::uint64_t threshold = -n % n;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Depth-first enumeration of the reduced words of s in lexicographic order.
// The callback may return false to stop early.
template <typename Callback>
bool for_each_reduced_word_impl(std::vector<int>& remaining, Word& prefix, size_t target_len,
                                Callback&& cb) {
  if (prefix.size() == target_len) return cb(const_cast<const Word&>(prefix));
  int n = static_cast<int>(remaining.size());
  for (int i = 1; i < n; ++i) {
    if (remaining[i - 1] > remaining[i]) {
      std::swap(remaining[i - 1], remaining[i]);
      prefix.push_back(i);
      bool keep_going = for_each_reduced_word_impl(remaining, prefix, target_len, cb);
      prefix.pop_back();
      std::swap(remaining[i - 1], remaining[i]);
      if (!keep_going) return false;
    }
  }
  return true;
}
}  // namespace detail

// Visits R(s) in lexicographic order; cb(word) -> bool, false stops.
template <typename Callback>
void for_each_reduced_word(const Permutation& s, Callback&& cb) {
  // Extending a prefix p by letter i keeps it reduced toward s exactly when
  // i is a descent position of s^{-1} * p, tracked here as `remaining`.
  std::vector<int> remaining = s.inverse().one_line();
  Word prefix;
  auto target = static_cast<size_t>(inversion_count(s));
  prefix.reserve(target);
  detail::for_each_reduced_word_impl(remaining, prefix, target, cb);
}

std::vector<Word> enumerate_reduced_words(const Permutation& s, long long cap = -1);
// All sorting networks of [n] in lexicographic order; n above max_n throws.
std::vector<Word> enumerate_networks(int n, int max_n = 7);
// Networks all of whose prefix permutations avoid the pattern.
std::vector<Word> enumerate_networks_avoiding(int n, const std::vector<int>& pattern,
                                              int max_n = 7);
// Closed product formula for the 132-avoiding count.
BigInt count_132_formula(int n);

struct NetworkFacts {
  bool prefixes_avoid_132 = false;
  bool q_shifted = false;
  bool lattice_word = false;
  bool equals_column_word = false;
  bool prefixes_avoid_213 = false;
  bool q_antidiagonal = false;
  bool complement_lattice_word = false;
};

// The four 132 criteria must agree, as must the three 213 criteria.
NetworkFacts characterize_network(const Word& w, int n);
Report characterize_network_report(const Word& w, int n);

// Uniform standard Young tableau of the given shape via the hook walk.
Tableau random_syt(const Partition& shape, std::mt19937_64& rng);

/// Uniform sorting-network sampler: draws a staircase tableau uniformly and
/// inverts it. Deterministic for a fixed seed.
class NetworkSampler {
 public:
  NetworkSampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {}
  Word next();
  int n() const { return n_; }

 private:
  int n_;
  std::mt19937_64 rng_;
};

Word random_network(int n, std::uint64_t seed);

/// Growth history of the frozen region along a word, stored as the step at
/// which each cell froze (0 = never).
struct FrozenTrace {
  int n = 0;
  int length = 0;
  std::vector<std::vector<int>> freeze_step;  // staircase-shaped

  Partition shape_at(int step) const;
};

FrozenTrace frozen_evolution(const Word& w, int n);

struct PointXY {
  double x = 0;
  double y = 0;
};

// Frozen cells at step floor(t * len), mapped into [-1, 1]^2.
std::vector<PointXY> scaled_frozen_region(const FrozenTrace& trace, double t);
// Cells whose east or south neighbor lies outside the frozen region.
std::vector<PointXY> scaled_frozen_boundary(const FrozenTrace& trace, double t);
// Samples the arc x <= -cos(pi t), y >= cos(pi t) of the quadric
// sin^2(pi t) - 2xy cos(pi t) - x^2 - y^2 = 0.
std::vector<PointXY> conjecture_boundary(double t, int num_points);
// One-sided deviation: max over boundary cells of the distance to the arc.
double boundary_deviation(const FrozenTrace& trace, double t, int arc_points = 0);

std::string wiring_diagram_svg(const Word& w, int n);

}  // namespace egkit
