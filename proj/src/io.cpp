#include "egkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace egkit {

namespace {

std::vector<int> parse_int_sequence(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  std::vector<int> out;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // One unseparated run of digits: one letter per digit.
    for (char ch : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("unexpected character in digit run: " + tokens[0]);
      }
      out.push_back(ch - '0');
    }
    return out;
  }
  for (const std::string& token : tokens) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: " + token);
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: " + token);
    out.push_back(value);
  }
  return out;
}

}  // namespace

Word parse_word(const std::string& text) {
  Word w = parse_int_sequence(text);
  validate_word(w);
  return w;
}

Permutation parse_permutation(const std::string& text) {
  return Permutation(parse_int_sequence(text));
}

std::string word_to_string(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) out << ' ';
    out << w[i];
  }
  return out.str();
}

std::string permutation_to_string(const Permutation& s) {
  std::ostringstream out;
  for (int i = 1; i <= s.size(); ++i) {
    if (i > 1) out << ' ';
    out << s(i);
  }
  return out.str();
}

Json partition_to_json(const Partition& p) { return Json(p); }

Partition partition_from_json(const Json& j) {
  Partition p = j.get<Partition>();
  validate_partition(p);
  return p;
}

Json cellset_to_json(const CellSet& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(Json::array({c.row, c.col}));
  return out;
}

CellSet cellset_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("cell set must be a JSON array");
  CellSet out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw std::invalid_argument("cells must be [row, col] pairs");
    }
    Cell c{item[0].get<int>(), item[1].get<int>()};
    if (c.row < 1 || c.col < 1) throw std::invalid_argument("cell coordinates must be >= 1");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("duplicate cell");
  }
  return out;
}

Json tableau_to_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.to_rows()) rows.push_back(Json(row));
  return Json{{"shape", partition_to_json(t.shape())}, {"rows", rows}};
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) {
    throw std::invalid_argument("tableau JSON needs a \"rows\" field");
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("rows")) rows.push_back(row.get<std::vector<int>>());
  Tableau t = Tableau::from_rows(rows);
  if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape()) {
    throw std::invalid_argument("tableau shape does not match its rows");
  }
  return t;
}

Json partial_tableau_to_json(const PartialTableau& t) {
  Json rows = Json::array();
  for (int i = 1; i <= t.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (t.has_label(i, j)) {
        row.push_back(t.label_at(i, j));
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"shape", partition_to_json(t.shape())}, {"rows", rows}};
}

PartialTableau partial_tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) {
    throw std::invalid_argument("tableau JSON needs a \"rows\" field");
  }
  Partition shape;
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<int> r;
    for (const auto& entry : row) r.push_back(entry.is_null() ? 0 : entry.get<int>());
    shape.push_back(static_cast<int>(r.size()));
    rows.push_back(std::move(r));
  }
  if (j.contains("shape") && partition_from_json(j.at("shape")) != shape) {
    throw std::invalid_argument("tableau shape does not match its rows");
  }
  return PartialTableau(std::move(shape), std::move(rows));
}

std::string tableau_to_grid(const Tableau& t) {
  int width = 1;
  for (int e : t.entries()) width = std::max(width, static_cast<int>(std::to_string(e).size()));
  std::ostringstream out;
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (j > 1) out << ' ';
      std::string s = std::to_string(t.at(i, j));
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string partial_tableau_to_grid(const PartialTableau& t) {
  int width = 1;
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (t.has_label(i, j)) {
        width = std::max(width, static_cast<int>(std::to_string(t.label_at(i, j)).size()));
      }
    }
  }
  std::ostringstream out;
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.row_length(i); ++j) {
      if (j > 1) out << ' ';
      std::string s = t.has_label(i, j) ? std::to_string(t.label_at(i, j)) : ".";
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string cellset_to_grid(const CellSet& cells, int rows, int cols) {
  std::vector<std::string> grid(rows, std::string(cols, '.'));
  for (const Cell& c : cells) {
    if (c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols) {
      grid[c.row - 1][c.col - 1] = 'X';
    }
  }
  std::ostringstream out;
  for (const auto& line : grid) out << line << '\n';
  return out.str();
}

}  // namespace egkit
