#pragma once

#include <string>

#include "json.hpp"

#include "egkit/jdt.hpp"
#include "egkit/permutation.hpp"
#include "egkit/tableau.hpp"
#include "egkit/types.hpp"

namespace egkit {

using Json = nlohmann::json;

// Whitespace- or comma-separated letters; a single run of digits is read one
// letter per digit (usable only while letters stay below 10).
Word parse_word(const std::string& text);
Permutation parse_permutation(const std::string& text);

// Compact digit string when all letters are below 10, else space-separated.
std::string word_to_string(const Word& w);
std::string permutation_to_string(const Permutation& s);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json cellset_to_json(const CellSet& cells);      // [[row, col], ...] row-major
CellSet cellset_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);          // {"shape": [...], "rows": [[...], ...]}
Tableau tableau_from_json(const Json& j);
Json partial_tableau_to_json(const PartialTableau& t);  // empty cells are null
PartialTableau partial_tableau_from_json(const Json& j);

std::string tableau_to_grid(const Tableau& t);
std::string partial_tableau_to_grid(const PartialTableau& t);
std::string cellset_to_grid(const CellSet& cells, int rows, int cols);

}  // namespace egkit
