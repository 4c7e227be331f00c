#pragma once

#include <string>
#include <string_view>

#include "zf/graph.hpp"

namespace zf::cli {

// A family spec (P:5, petersen, ...), "-" for an edge list on stdin, or the
// path of an edge-list file.
Graph load_graph_source(std::string_view source);

}  // namespace zf::cli
