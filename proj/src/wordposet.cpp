#include "egkit/wordposet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "egkit/eg.hpp"
#include "egkit/jdt.hpp"
#include "egkit/permutation.hpp"

namespace egkit {

namespace {

std::string word_compact(const Word& w) {
  std::ostringstream out;
  bool wide = false;
  for (int x : w) wide |= x > 9;
  for (size_t i = 0; i < w.size(); ++i) {
    if (wide && i) out << ' ';
    out << w[i];
  }
  return out.str();
}

// Packed dominance order: one byte per letter, compared lane-wise.
using Packed = unsigned __int128;

Packed pack_word(const Word& w) {
  detail::require(w.size() <= 16, "packed order supports at most 16 letters");
  Packed x = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    detail::require(w[i] >= 1 && w[i] <= 127, "packed order supports letters up to 127");
    x |= static_cast<Packed>(static_cast<unsigned char>(w[i])) << (8 * i);
  }
  return x;
}

Packed lane_mask(size_t lanes) {
  Packed mask = 0;
  for (size_t i = 0; i < lanes; ++i) mask |= static_cast<Packed>(0x80) << (8 * i);
  return mask;
}

// lo <= hi in every lane; letters stay below 0x80 so borrows cannot cross.
inline bool dominated(Packed lo, Packed hi, Packed mask) {
  return (((hi | mask) - lo) & mask) == mask;
}

int letter_sum(const Word& w) { return std::accumulate(w.begin(), w.end(), 0); }

}  // namespace

int fiber_alphabet_bound(const Partition& shape) {
  validate_partition(shape);
  int bound = 0;
  for (size_t i = 0; i < shape.size(); ++i) {
    bound = std::max(bound, static_cast<int>(i) + shape[i]);
  }
  return bound;
}

std::vector<Word> enumerate_fiber(const Tableau& q, int cell_cap, int alphabet_override) {
  if (!q.is_standard()) throw std::invalid_argument("fiber needs a standard tableau");
  if (q.cells() > cell_cap) throw std::invalid_argument("tableau exceeds the fiber cell cap");
  int m = q.cells();
  int bound = alphabet_override > 0 ? alphabet_override : fiber_alphabet_bound(q.shape());
  // Cell added at each step is dictated by q; prune any prefix that deviates.
  std::vector<Cell> cell_of_step(m + 1);
  for (int i = 1; i <= q.rows(); ++i) {
    for (int j = 1; j <= q.row_length(i); ++j) cell_of_step[q.at(i, j)] = {i, j};
  }
  std::vector<Word> out;
  Word word;
  word.reserve(m);
  std::vector<InsertionState> stack(m + 1);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > m) {
      if (frozen_region(stack[m].p_rows()) == q.shape()) out.push_back(word);
      return;
    }
    for (int letter = 1; letter <= bound; ++letter) {
      stack[k] = stack[k - 1];
      Cell added = stack[k].insert(letter);
      if (added == cell_of_step[k]) {
        word.push_back(letter);
        self(self, k + 1);
        word.pop_back();
      }
    }
  };
  rec(rec, 1);
  return out;
}

int WordPoset::index_of(const Word& w) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), w);
  if (it == elements.end() || *it != w) return -1;
  return static_cast<int>(it - elements.begin());
}

WordPoset build_poset_from_elements(const Tableau& q, std::vector<Word> elements) {
  WordPoset poset;
  poset.q = q;
  std::sort(elements.begin(), elements.end());
  poset.elements = std::move(elements);
  int count = static_cast<int>(poset.elements.size());
  size_t len = q.cells();
  for (const Word& w : poset.elements) {
    detail::require(w.size() == len, "fiber elements must all have the tableau size");
  }

  // Index elements by letter sum; u < v forces sum(u) < sum(v).
  std::vector<Packed> packed(count);
  std::vector<int> sums(count);
  for (int i = 0; i < count; ++i) {
    packed[i] = pack_word(poset.elements[i]);
    sums[i] = letter_sum(poset.elements[i]);
  }
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sums[a] < sums[b]; });
  Packed mask = lane_mask(len);

  std::vector<char> is_maximal(count, 1);
  std::vector<int> preds;
  std::vector<int> cover_of;
  for (int oi = 0; oi < count; ++oi) {
    int v = order[oi];
    preds.clear();
    // Walk candidates from the largest letter sums down so that the maximal
    // predecessors (the covers) appear first.
    for (int oj = oi - 1; oj >= 0; --oj) {
      int u = order[oj];
      if (sums[u] >= sums[v]) continue;
      if (dominated(packed[u], packed[v], mask)) preds.push_back(u);
    }
    cover_of.clear();
    for (int u : preds) {
      bool below_cover = false;
      for (int c : cover_of) {
        if (dominated(packed[u], packed[c], mask)) {
          below_cover = true;
          break;
        }
      }
      if (!below_cover) {
        cover_of.push_back(u);
        poset.covers.emplace_back(u, v);
        is_maximal[u] = 0;
      }
    }
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  for (int i = 0; i < count; ++i) {
    if (is_maximal[i]) poset.maximal_elements.push_back(i);
  }

  poset.bottom = poset.index_of(column_word(q));
  int max_letter = 0;
  for (const Word& w : poset.elements) {
    for (int x : w) max_letter = std::max(max_letter, x);
  }
  int reduced_count = 0;
  for (int i = 0; i < count; ++i) {
    if (is_reduced(poset.elements[i], max_letter + 1)) {
      poset.top = i;
      ++reduced_count;
    }
  }
  detail::require(reduced_count == 1, "a fiber must contain exactly one reduced word");
  return poset;
}

WordPoset build_poset(const Tableau& q, int cell_cap) {
  return build_poset_from_elements(q, enumerate_fiber(q, cell_cap));
}

int interval_height(const WordPoset& poset, const Word& bottom, const Word& top) {
  int b = poset.index_of(bottom);
  int t = poset.index_of(top);
  if (b < 0 || t < 0) throw std::invalid_argument("endpoint is not a poset element");
  Packed pb = pack_word(poset.elements[b]);
  Packed pt = pack_word(poset.elements[t]);
  Packed mask = lane_mask(poset.elements[b].size());
  if (!dominated(pb, pt, mask)) throw std::invalid_argument("endpoints are incomparable");

  int count = static_cast<int>(poset.elements.size());
  std::vector<char> inside(count, 0);
  for (int i = 0; i < count; ++i) {
    Packed p = pack_word(poset.elements[i]);
    inside[i] = dominated(pb, p, mask) && dominated(p, pt, mask);
  }
  // Longest path over covers; processing by letter sum is a topological order.
  std::vector<int> dist(count, -1);
  dist[b] = 0;
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int c) {
    return letter_sum(poset.elements[a]) < letter_sum(poset.elements[c]);
  });
  std::vector<std::vector<int>> outgoing(count);
  for (const auto& [u, v] : poset.covers) {
    if (inside[u] && inside[v]) outgoing[u].push_back(v);
  }
  for (int u : order) {
    if (!inside[u] || dist[u] < 0) continue;
    for (int v : outgoing[u]) dist[v] = std::max(dist[v], dist[u] + 1);
  }
  detail::require(dist[t] >= 0, "interval top must be reachable from the bottom");
  return dist[t];
}

std::map<std::vector<int>, std::vector<Word>> staircase_fiber_sweep(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("fiber sweep supports 2 <= n <= 5");
  int m = n * (n - 1) / 2;
  Partition sc = staircase(n);
  std::map<std::vector<int>, std::vector<Word>> fibers;
  int bound = n - 1;
  Word word(m, 1);
  while (true) {
    InsertionState state;
    for (int letter : word) state.insert(letter);
    // A frozen staircase region with m cells forces the shape itself.
    if (frozen_region(state.p_rows()) == sc) {
      fibers[state.recording_tableau().entries()].push_back(word);
    }
    int pos = m - 1;
    while (pos >= 0 && word[pos] == bound) word[pos--] = 1;
    if (pos < 0) break;
    word[pos]++;
  }
  return fibers;
}

EtaTable eta_table(int n, bool allow_long_run) {
  if (n < 3) throw std::invalid_argument("eta table needs n >= 3");
  if (n > 6 || (n == 6 && !allow_long_run)) {
    throw std::invalid_argument("eta table beyond n = 5 requires the long-run flag");
  }
  EtaTable table;
  table.n = n;
  int m = n * (n - 1) / 2;
  Partition sc = staircase(n);
  long long max_height = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  table.counts.assign(max_height + 1, 0);

  std::map<std::vector<int>, std::vector<Word>> fibers;
  if (n <= 5) {
    fibers = staircase_fiber_sweep(n);
  } else {
    for (const Tableau& q : enumerate_syt(sc, m)) {
      fibers[q.entries()] = enumerate_fiber(q, m);
    }
  }

  for (const Tableau& q : enumerate_syt(sc, m)) {
    auto it = fibers.find(q.entries());
    detail::require(it != fibers.end(), "every staircase tableau has a nonempty fiber");
    WordPoset poset = build_poset_from_elements(q, std::move(it->second));
    int height = interval_height(poset, column_word(q), eg_inverse(q));
    detail::require(height <= max_height, "interval height exceeds the slide bound");
    table.counts[height]++;
    table.height_by_q.emplace(q, height);
  }
  return table;
}

Report check_descents(const WordPoset& poset) {
  Report report;
  report.name = "fiber elements share the tableau descents";
  std::vector<int> tableau_descents = descent_set(poset.q);
  for (const Word& w : poset.elements) {
    std::vector<int> weak;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] >= w[i + 1]) weak.push_back(static_cast<int>(i) + 1);
    }
    ++report.checks;
    if (weak != tableau_descents) report.fail("descents differ for " + word_compact(w));
  }
  return report;
}

Report check_descents(const Tableau& q) {
  return check_descents(build_poset(q, std::max(q.cells(), 12)));
}

Report check_minimal(const WordPoset& poset) {
  Report report;
  report.name = "column word is the unique minimal element";
  if (!is_staircase(poset.q.shape())) {
    report.notes.push_back("exploratory: shape is not a staircase");
  }
  Word bottom = column_word(poset.q);
  ++report.checks;
  if (poset.bottom < 0) {
    report.fail("column word missing from the fiber: " + word_compact(bottom));
    return report;
  }
  Packed pb = pack_word(bottom);
  Packed mask = lane_mask(bottom.size());
  for (const Word& w : poset.elements) {
    ++report.checks;
    if (!dominated(pb, pack_word(w), mask)) {
      report.fail("element below the column word: " + word_compact(w));
    }
  }
  // A unique minimum also means no other minimal element.
  int minimal_count = 0;
  std::vector<char> has_pred(poset.elements.size(), 0);
  for (const auto& [u, v] : poset.covers) has_pred[v] = 1;
  for (size_t i = 0; i < poset.elements.size(); ++i) {
    if (!has_pred[i]) ++minimal_count;
  }
  ++report.checks;
  if (minimal_count != 1) report.fail("poset has more than one minimal element");
  return report;
}

Report check_minimal(const Tableau& q) {
  return check_minimal(build_poset(q, std::max(q.cells(), 12)));
}

Report check_height_formula(const WordPoset& poset) {
  Report report;
  report.name = "reduced element maximality and height formula";
  detail::require(poset.bottom >= 0 && poset.top >= 0, "fiber must contain bottom and top");
  const Word& top = poset.elements[poset.top];
  const Word& bottom = poset.elements[poset.bottom];
  Packed mask = lane_mask(top.size());
  Packed pt = pack_word(top);
  ++report.checks;
  for (const Word& w : poset.elements) {
    if (w != top && dominated(pt, pack_word(w), mask)) {
      report.fail("element above the reduced word: " + word_compact(w));
      break;
    }
  }
  int gap = letter_sum(top) - letter_sum(bottom);
  int height = interval_height(poset, bottom, top);
  ++report.checks;
  if (height != gap) {
    report.fail("interval height " + std::to_string(height) + " differs from the gap sum " +
                std::to_string(gap));
  }
  report.notes.push_back("maximal elements: " + std::to_string(poset.maximal_elements.size()));
  return report;
}

Report check_height_formula(const Tableau& q) {
  return check_height_formula(build_poset(q, std::max(q.cells(), 12)));
}

Report check_eta_consequences(int n, const EtaTable* precomputed) {
  Report report;
  report.name = "eta table symmetries";
  EtaTable local;
  const EtaTable* table = precomputed;
  if (table == nullptr || table->n != n) {
    local = eta_table(n);
    table = &local;
  }
  long long max_height = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  for (const auto& [q, height] : table->height_by_q) {
    auto transposed = table->height_by_q.find(transpose(q));
    detail::require(transposed != table->height_by_q.end(), "transpose stays staircase");
    ++report.checks;
    if (transposed->second != max_height - height) {
      report.fail("transpose height is not complementary");
    }
    auto evacuated = table->height_by_q.find(evacuation(q));
    detail::require(evacuated != table->height_by_q.end(), "evacuation stays staircase");
    ++report.checks;
    if (evacuated->second != height) report.fail("evacuation changes the height");
    ++report.checks;
    if ((height == max_height) != is_antidiagonal_increasing(q)) {
      report.fail("maximal height does not match the antidiagonal condition");
    }
  }
  if (n >= 4) {
    for (long long count : table->counts) {
      ++report.checks;
      if (count % 2 != 0) report.fail("eta entry is odd");
    }
  }
  return report;
}

}  // namespace egkit
