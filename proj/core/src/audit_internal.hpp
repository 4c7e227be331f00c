#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zf/audit.hpp"

namespace zf::detail {

struct AuditJob {
  AuditInstance instance;
  std::vector<std::string_view> checks;
};

// Evaluates jobs on `jobs` threads; entries come back in job order.
std::vector<AuditEntry> run_jobs(const std::vector<AuditJob>& work, const Limits& limits, int jobs);

std::string graph_key(const Graph& g);
std::string functigraph_key(const Graph& g, const VertexFunction& f);

// Graph-level checks applicable to g.
std::vector<std::string_view> graph_checks(const Graph& g);
// General functigraph checks applicable to f.
std::vector<std::string_view> functigraph_checks(const VertexFunction& f);

}  // namespace zf::detail
