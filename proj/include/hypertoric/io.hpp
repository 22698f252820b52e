#pragma once
#include "hypertoric/graph.hpp"
#include "hypertoric/int_matrix.hpp"

#include <string>

namespace hypertoric {

// Matrix file: a "rows cols" header line followed by that many rows of
// whitespace-separated integers; lines starting with '#' are ignored.
// A document whose first non-space character is '{' is parsed as JSON
// with a "rows" array instead.
IntMatrix parse_matrix_text(const std::string& text, const std::string& source_name = "<input>");
std::string format_matrix_file(const IntMatrix& m);

// Graph file: one "u v" edge per line with non-negative vertex labels;
// repeated lines are multi-edges; '#' comments; u = v rejected.
Graph parse_graph_text(const std::string& text, const std::string& source_name = "<input>");

IntMatrix read_matrix_file(const std::string& path);
Graph read_graph_file(const std::string& path);

} // namespace hypertoric
