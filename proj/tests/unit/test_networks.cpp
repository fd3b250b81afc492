#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "egkit/eg.hpp"
#include "egkit/networks.hpp"
#include "egkit/permutation.hpp"
#include "egkit/stats.hpp"
#include "egkit/tableau.hpp"

using namespace egkit;

TEST_SUITE_BEGIN("networks");

TEST_CASE("network enumeration is lexicographic and complete") {
  auto three = enumerate_networks(3);
  CHECK(three == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});

  auto four = enumerate_networks(4);
  CHECK(four.size() == 16);
  CHECK(four.front() == Word{1, 2, 1, 3, 2, 1});
  CHECK(four.back() == Word{3, 2, 3, 1, 2, 3});
  CHECK(std::is_sorted(four.begin(), four.end()));
  for (const Word& w : four) {
    CHECK(is_reduced(w, 4));
    CHECK(compose_word(w, 4) == Permutation::reversal(4));
  }

  CHECK(enumerate_networks(5).size() == 768);
  CHECK_THROWS_AS(enumerate_networks(8), std::invalid_argument);
}

TEST_CASE("reduced word enumeration for a fixed permutation") {
  auto words = enumerate_reduced_words(Permutation({3, 2, 4, 1}));
  CHECK(words == std::vector<Word>{{1, 2, 1, 3}, {1, 2, 3, 1}, {2, 1, 2, 3}});
  CHECK(enumerate_reduced_words(Permutation::identity(4)) == std::vector<Word>{{}});
  CHECK(enumerate_reduced_words(Permutation::reversal(4), 5).size() == 5);
}

TEST_CASE("pattern-avoiding network enumeration matches the closed formula") {
  CHECK(enumerate_networks_avoiding(3, {1, 3, 2}) == std::vector<Word>{{1, 2, 1}});
  auto four = enumerate_networks_avoiding(4, {1, 3, 2});
  CHECK(four == std::vector<Word>{{1, 2, 1, 3, 2, 1}, {1, 2, 3, 1, 2, 1}});
  CHECK(count_132_formula(3) == 1);
  CHECK(count_132_formula(4) == 2);
  CHECK(count_132_formula(5) == 12);
  CHECK(count_132_formula(6) == 286);
  for (int n = 3; n <= 5; ++n) {
    CHECK(BigInt(enumerate_networks_avoiding(n, {1, 3, 2}).size()) == count_132_formula(n));
    CHECK(BigInt(enumerate_networks_avoiding(n, {2, 1, 3}).size()) == count_132_formula(n));
  }
}

TEST_CASE("network characterizations agree pairwise") {
  NetworkFacts good = characterize_network({1, 2, 1, 3, 2, 1}, 4);
  CHECK(good.prefixes_avoid_132);
  CHECK(good.q_shifted);
  CHECK(good.lattice_word);
  CHECK(good.equals_column_word);

  NetworkFacts bad = characterize_network({3, 2, 1, 2, 3, 2}, 4);
  CHECK_FALSE(bad.prefixes_avoid_132);
  CHECK_FALSE(bad.q_shifted);
  CHECK_FALSE(bad.lattice_word);
  CHECK_FALSE(bad.equals_column_word);

  for (int n = 3; n <= 5; ++n) {
    for (const Word& w : enumerate_networks(n)) {
      CHECK(characterize_network_report(w, n).ok());
    }
  }
  CHECK_THROWS_AS(characterize_network({1, 2, 1}, 4), std::invalid_argument);
}

TEST_CASE("reversal preserves prefix 132-avoidance of networks") {
  for (int n = 4; n <= 5; ++n) {
    for (const Word& w : enumerate_networks_avoiding(n, {1, 3, 2})) {
      Word reversed(w.rbegin(), w.rend());
      CHECK(characterize_network(reversed, n).prefixes_avoid_132);
    }
  }
}

TEST_CASE("132-avoiding reduced words are counted by sub-staircase tableaux") {
  for (int n = 3; n <= 5; ++n) {
    for (const std::vector<int>& pattern : {std::vector<int>{1, 3, 2}, std::vector<int>{2, 1, 3}}) {
      long long words = 0;
      std::vector<int> line(n);
      for (int i = 0; i < n; ++i) line[i] = i + 1;
      std::vector<Permutation> group;
      do {
        group.emplace_back(line);
      } while (std::next_permutation(line.begin(), line.end()));
      for (const Permutation& s : group) {
        if (!avoids_pattern(s, pattern)) continue;
        for_each_reduced_word(s, [&](const Word&) {
          ++words;
          return true;
        });
      }
      BigInt expected = 0;
      for (const Partition& shape : subpartitions(staircase(n))) expected += count_syt(shape);
      CHECK(BigInt(words) == expected);
    }
  }
}

TEST_CASE("hook walk sampling produces standard tableaux deterministically") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Tableau t = random_syt(Partition{4, 3, 1}, rng);
    CHECK(t.is_standard());
    CHECK(t.shape() == Partition{4, 3, 1});
  }
  CHECK(random_network(3, 9) == random_network(3, 9));
  Word sample = random_network(3, 1);
  CHECK((sample == Word{1, 2, 1} || sample == Word{2, 1, 2}));
  Word big = random_network(6, 42);
  CHECK(compose_word(big, 6) == Permutation::reversal(6));
}

TEST_CASE("sampled networks cover the worked cases uniformly enough") {
  auto all = enumerate_networks(4);
  std::map<Word, int> counts;
  NetworkSampler sampler(4, 271828);
  const int samples = 16000;
  for (int k = 0; k < samples; ++k) counts[sampler.next()]++;
  CHECK(counts.size() == all.size());
  double expected = static_cast<double>(samples) / all.size();
  double stat = 0;
  for (const auto& [w, c] : counts) {
    double diff = c - expected;
    stat += diff * diff / expected;
  }
  CHECK(chi_square_pvalue(stat, static_cast<int>(all.size()) - 1) > 1e-4);
}

TEST_CASE("frozen trace grows to the full staircase") {
  Word w{1, 2, 1, 3, 2, 1};
  FrozenTrace trace = frozen_evolution(w, 4);
  CHECK(trace.shape_at(0).empty());
  for (int k = 1; k <= 6; ++k) {
    CHECK(partition_cells(trace.shape_at(k)) == k);  // column words freeze every step
  }
  CHECK(trace.shape_at(6) == staircase(4));

  FrozenTrace other = frozen_evolution({3, 2, 1, 2, 3, 2}, 4);
  CHECK(other.shape_at(6) == staircase(4));
  int prev = 0;
  for (int k = 1; k <= 6; ++k) {
    int cells = partition_cells(other.shape_at(k));
    CHECK(cells >= prev);
    prev = cells;
  }
  CHECK_THROWS_AS(frozen_evolution({1, 2, 1}, 4), std::invalid_argument);
}

TEST_CASE("conjectured arc at the half-time is the unit quarter circle") {
  auto arc = conjecture_boundary(0.5, 101);
  for (const PointXY& p : arc) {
    CHECK(std::abs(p.x * p.x + p.y * p.y - 1.0) < 1e-9);
    CHECK(p.x <= 1e-9);
    CHECK(p.y >= -1e-9);
  }
  CHECK_THROWS_AS(conjecture_boundary(0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_boundary(1.0, 10), std::invalid_argument);

  // End points sit on the box edges at every time.
  for (double t : {0.25, 0.5, 0.75}) {
    auto pts = conjecture_boundary(t, 11);
    double c = std::cos(std::acos(-1.0) * t);
    CHECK(std::abs(pts.front().x + 1.0) < 1e-9);
    CHECK(std::abs(pts.front().y - c) < 1e-9);
    CHECK(std::abs(pts.back().x + c) < 1e-9);
    CHECK(std::abs(pts.back().y - 1.0) < 1e-9);
  }
}

TEST_CASE("boundary deviation shrinks to sane values already at n=60") {
  Word w = random_network(60, 7);
  FrozenTrace trace = frozen_evolution(w, 60);
  for (double t : {0.25, 0.5, 0.75}) {
    double dev = boundary_deviation(trace, t);
    CHECK(dev < 0.3);
  }
}

TEST_CASE("wiring diagrams cross once per letter") {
  std::string svg = wiring_diagram_svg({2, 3, 2, 1, 2, 3}, 4);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 4);
  size_t polylines = 0;
  for (size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos; ++pos) {
    ++polylines;
  }
  CHECK(polylines == 4);

  std::string flat = wiring_diagram_svg({}, 3);
  size_t flat_polylines = 0;
  for (size_t pos = 0; (pos = flat.find("<polyline", pos)) != std::string::npos; ++pos) {
    ++flat_polylines;
  }
  CHECK(flat_polylines == 3);
  CHECK_THROWS_AS(wiring_diagram_svg({5}, 4), std::invalid_argument);
}

TEST_SUITE_END();
