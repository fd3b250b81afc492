#include "egkit/vexillary.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "egkit/eg.hpp"
#include "egkit/networks.hpp"

namespace egkit {

std::vector<std::pair<Cell, int>> ColumnStacks::cells() const {
  std::vector<std::pair<Cell, int>> out;
  int max_height = 0;
  for (int h : heights) max_height = std::max(max_height, h);
  for (int i = 1; i <= max_height; ++i) {
    for (int x = 1; x <= columns(); ++x) {
      if (heights[x - 1] >= i) out.push_back({Cell{i, x}, x + i - 1});
    }
  }
  return out;
}

ColumnStacks column_stacks(const Permutation& s) { return ColumnStacks{lehmer_code(s)}; }

Tableau vexillary_tableau(const Permutation& s) {
  if (!is_vexillary(s)) throw std::domain_error("permutation is not vexillary");
  ColumnStacks stacks = column_stacks(s);
  std::vector<std::vector<int>> rows;
  for (int x = 1; x <= stacks.columns(); ++x) {
    for (int i = 1; i <= stacks.height(x); ++i) {
      if (static_cast<int>(rows.size()) < i) rows.emplace_back();
      rows[i - 1].push_back(x + i - 1);
    }
  }
  if (rows.empty()) return Tableau();
  Tableau out = Tableau::from_rows(rows);
  detail::require(out.is_increasing(), "left-justified stacks of a vexillary permutation");
  return out;
}

CellSet tableau_to_diagram(const Tableau& p) {
  if (!p.is_increasing()) throw std::invalid_argument("expected an increasing tableau");
  CellSet out;
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.row_length(i); ++j) {
      int k = p.at(i, j) - (i + j - 1);
      detail::require(k >= 0, "increasing tableau entries are at least i + j - 1");
      out.push_back({i + k, j + k});
    }
  }
  std::sort(out.begin(), out.end());
  detail::require(std::adjacent_find(out.begin(), out.end()) == out.end(),
                  "diagonal shift map must be injective");
  return out;
}

Report verify_vexillary_correspondence(const Permutation& s, long long word_cap) {
  if (!is_vexillary(s)) throw std::invalid_argument("permutation is not vexillary");
  Report report;
  report.name = "vexillary tableau-diagram correspondence";
  CellSet diagram = rothe_diagram(s);
  Tableau expected = vexillary_tableau(s);
  long long seen = 0;
  bool truncated = false;
  for_each_reduced_word(s, [&](const Word& w) {
    if (word_cap > 0 && seen >= word_cap) {
      truncated = true;
      return false;
    }
    ++seen;
    EgPair pair = eg_map(w);
    ++report.checks;
    if (!(pair.p == expected)) {
      std::ostringstream msg;
      msg << "P differs from the diagram construction at word #" << seen;
      report.fail(msg.str());
      return true;
    }
    if (!(tableau_to_diagram(pair.p) == diagram)) {
      report.fail("mapped cells differ from the Rothe diagram at word #" + std::to_string(seen));
      return true;
    }
    for (int i = 1; i <= pair.p.rows(); ++i) {
      for (int j = 1; j <= pair.p.row_length(i); ++j) {
        int k = pair.p.at(i, j) - (i + j - 1);
        if (k != nw_rank(s, i + k, j + k)) {
          report.fail("shift does not match the rank at cell (" + std::to_string(i + k) + ", " +
                      std::to_string(j + k) + ")");
          return true;
        }
      }
    }
    return true;
  });
  if (truncated) {
    report.notes.push_back("word sample truncated at cap " + std::to_string(word_cap));
  }
  return report;
}

}  // namespace egkit
