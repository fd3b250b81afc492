#include "egkit/eg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "egkit/jdt.hpp"
#include "egkit/permutation.hpp"

namespace egkit {

namespace {

std::string word_brief(const Word& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

// Core row-insertion step. Returns the row that received a new cell.
int insert_into_rows(std::vector<std::vector<int>>& rows, int x) {
  for (size_t i = 0;; ++i) {
    if (i == rows.size()) rows.emplace_back();
    auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return static_cast<int>(i) + 1;
    }
    if (*it == x) {
      x = x + 1;  // equal bump: the row stays as it is
    } else {
      int bumped = *it;
      *it = x;
      x = bumped;
    }
  }
}

}  // namespace

Cell InsertionState::insert(int letter) {
  if (letter < 1) throw std::invalid_argument("letters must be >= 1");
  ++step_;
  int row = insert_into_rows(p_, letter);
  if (row > static_cast<int>(q_.size())) q_.emplace_back();
  q_[row - 1].push_back(step_);
  Cell added{row, static_cast<int>(q_[row - 1].size())};
  detail::require(p_[row - 1].size() == q_[row - 1].size(),
                  "insertion and recording tableaux diverged");
  return added;
}

Tableau InsertionState::insertion_tableau() const { return Tableau::from_rows(p_); }
Tableau InsertionState::recording_tableau() const { return Tableau::from_rows(q_); }

std::pair<Tableau, Cell> eg_insert_letter(const Tableau& p, int letter) {
  if (!p.is_increasing()) throw std::invalid_argument("insertion needs an increasing tableau");
  if (letter < 1) throw std::invalid_argument("letters must be >= 1");
  auto rows = p.to_rows();
  int row = insert_into_rows(rows, letter);
  Cell added{row, static_cast<int>(rows[row - 1].size())};
  Tableau out = Tableau::from_rows(rows);
  detail::require(out.is_increasing(), "insertion result must stay increasing");
  return {std::move(out), added};
}

EgPair eg_map(const Word& w) {
  validate_word(w);
  InsertionState state;
  for (int letter : w) state.insert(letter);
  return {state.insertion_tableau(), state.recording_tableau()};
}

Partition frozen_region(const std::vector<std::vector<int>>& p_rows) {
  Partition out;
  for (size_t i = 0; i < p_rows.size(); ++i) {
    int len = 0;
    while (len < static_cast<int>(p_rows[i].size()) &&
           p_rows[i][len] == static_cast<int>(i) + len + 1) {
      ++len;
    }
    if (len == 0) break;
    if (!out.empty()) {
      detail::require(len <= out.back(), "frozen cells must form a Young diagram");
    }
    out.push_back(len);
  }
  // Strictness forces every cell north-west of a frozen cell to be frozen;
  // re-check the rows below a stopped row are unfrozen at the front.
  for (size_t i = out.size(); i < p_rows.size(); ++i) {
    detail::require(p_rows[i].empty() || p_rows[i][0] != static_cast<int>(i) + 1,
                    "frozen cells must form a Young diagram");
  }
  return out;
}

Partition frozen_region(const Tableau& p) {
  if (!p.is_increasing()) throw std::invalid_argument("frozen region needs an increasing tableau");
  return frozen_region(p.to_rows());
}

bool is_frozen(const Tableau& p) { return frozen_region(p) == p.shape(); }

std::vector<TraceStep> insertion_trace(const Word& w) {
  validate_word(w);
  std::vector<TraceStep> out;
  out.reserve(w.size());
  InsertionState state;
  for (int letter : w) {
    state.insert(letter);
    Tableau p = state.insertion_tableau();
    Partition frozen = frozen_region(state.p_rows());
    out.push_back({std::move(p), std::move(frozen)});
  }
  return out;
}

Report verify_frozen_equals_diagram(const Word& w, int n) {
  if (!is_reduced(w, n)) throw std::invalid_argument("word is not reduced");
  Report report;
  report.name = "frozen region matches top-left diagram component";
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  InsertionState state;
  for (size_t k = 0; k < w.size(); ++k) {
    std::swap(line[w[k] - 1], line[w[k]]);
    state.insert(w[k]);
    Partition frozen = frozen_region(state.p_rows());
    Partition diagram = top_left_component(rothe_diagram(Permutation(line)));
    ++report.checks;
    if (frozen != diagram) {
      report.fail("prefix length " + std::to_string(k + 1) + " of word " + word_brief(w));
    }
  }
  return report;
}

Report verify_symmetries(const Word& w, int n) {
  if (!is_reduced(w, n)) throw std::invalid_argument("word is not reduced");
  Report report;
  report.name = "reversal and complement symmetries";
  EgPair fwd = eg_map(w);
  EgPair rev = eg_map(reverse_word(w));
  ++report.checks;
  if (!(rev.p == transpose(fwd.p))) {
    report.fail("P of reversed word is not the transpose for " + word_brief(w));
  }
  ++report.checks;
  if (!(rev.q == evacuation(fwd.q))) {
    report.fail("Q of reversed word is not the evacuation for " + word_brief(w));
  }
  bool network = compose_word(w, n) == Permutation::reversal(n) &&
                 static_cast<long long>(w.size()) == static_cast<long long>(n) * (n - 1) / 2;
  if (network) {
    EgPair comp = eg_map(complement_word(w, n));
    ++report.checks;
    if (!(comp.q == transpose(fwd.q))) {
      report.fail("Q of complemented network is not the transpose for " + word_brief(w));
    }
  } else {
    report.notes.push_back("complement identity skipped: not a sorting network");
  }
  return report;
}

}  // namespace egkit
