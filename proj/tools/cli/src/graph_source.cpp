#include "zf/cli/graph_source.hpp"

#include <iostream>

#include "zf/families.hpp"
#include "zf/graph_io.hpp"

namespace zf::cli {

Graph load_graph_source(std::string_view source) {
  if (is_family_spec(source)) return family(parse_family_spec(source));
  if (source == "-") {
    auto g = read_edge_list(std::cin);
    g.set_name("stdin");
    return g;
  }
  return read_edge_list_file(std::string(source));
}

}  // namespace zf::cli
