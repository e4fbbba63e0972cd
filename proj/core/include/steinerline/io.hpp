#pragma once

#include <iosfwd>
#include <string>

#include "steinerline/graph.hpp"

namespace steinerline {

// Edge-list text format: UTF-8 lines, `#` starts a comment, the first
// non-comment line is `n <vertex_count>`, every further non-comment line is
// `u v`. EdgeIds are assigned in file order. Blank lines are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

} // namespace steinerline
