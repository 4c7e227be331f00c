#include "zf/cli/dot.hpp"

#include <ostream>

namespace zf::cli {

void write_functigraph_dot(std::ostream& out, const FunctigraphInstance& fg, const std::optional<VertexSet>& highlight) {
  const int n = fg.base.order();
  auto label = [n](int v) { return functigraph_label(v, n); };
  out << "graph functigraph {\n";
  out << "  label=\"" << fg.whole.name();
  if (highlight) out << ", Z = " << highlight->size();
  out << "\";\n";
  out << "  node [shape=circle];\n";
  for (int copy = 0; copy < 2; ++copy) {
    out << "  subgraph copy" << copy + 1 << " {\n    rank=same;\n";
    for (int i = 0; i < n; ++i) {
      const int v = copy * n + i;
      out << "    " << label(v);
      if (highlight && highlight->contains(v)) out << " [style=filled, fillcolor=black, fontcolor=white]";
      out << ";\n";
    }
    out << "  }\n";
  }
  for (const auto& e : fg.whole.edges()) {
    out << "  " << label(e.a) << " -- " << label(e.b);
    if (e.a < n && e.b >= n) out << " [style=dashed, constraint=false]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace zf::cli
