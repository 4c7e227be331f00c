#pragma once

#include <iosfwd>
#include <optional>

#include "zf/functigraph.hpp"

namespace zf::cli {

// Copy 1 and copy 2 on separate ranks, connector edges dashed and
// unconstrained. Labels are u1..un / v1..vn. Vertices of `highlight` are
// filled.
void write_functigraph_dot(std::ostream& out, const FunctigraphInstance& fg,
                           const std::optional<VertexSet>& highlight = std::nullopt);

}  // namespace zf::cli
