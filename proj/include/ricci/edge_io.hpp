#pragma once

#include <iosfwd>
#include <string>

#include "ricci/graph.hpp"

namespace ricci {

// Edge-list text format: '#' starts a comment, blank lines are skipped, the
// first content line is "n <vertex_count>" and every following line is one
// "u v" pair (0-indexed). Any malformed line is an input error.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace ricci
