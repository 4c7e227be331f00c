#pragma once

#include <iosfwd>
#include <string>

#include "zf/graph.hpp"

namespace zf {

// Edge-list text format:
//   n m
//   a b        (m lines, 0-based, whitespace separated)
// Lines starting with '#' and blank lines are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace zf
