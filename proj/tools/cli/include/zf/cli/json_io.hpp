#pragma once

#include <nlohmann/json.hpp>

#include "zf/audit.hpp"
#include "zf/forcing.hpp"
#include "zf/functigraph.hpp"
#include "zf/graph.hpp"

namespace zf::cli {

using Json = nlohmann::ordered_json;

// {"n": 4, "edges": [[0,1], ...]}, 0-based like the edge-list format.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// 1-based image list.
Json function_to_json(const VertexFunction& f);
VertexFunction function_from_json(const Json& j);

// 1-based vertex labels when one_based is set.
Json set_to_json(const VertexSet& s, bool one_based);
Json chronicle_to_json(const ForcingChronicle& c);

// Report layout: suite, seed, summary, coverage, entries. Entries carry
// the full instance (graph, function, params) unless they passed.
Json report_to_json(const AuditReport& report);
AuditEntry entry_from_json(const Json& j);

}  // namespace zf::cli
