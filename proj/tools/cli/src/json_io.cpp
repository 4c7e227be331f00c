#include "zf/cli/json_io.hpp"

#include "zf/errors.hpp"

namespace zf::cli {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json function_to_json(const VertexFunction& f) {
  Json out = Json::array();
  for (int x : f.images()) out.push_back(x + 1);
  return out;
}

VertexFunction function_from_json(const Json& j) {
  try {
    std::vector<int> images;
    for (const auto& x : j) images.push_back(x.get<int>() - 1);
    return VertexFunction(std::move(images));
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed function JSON: ") + ex.what());
  }
}

Json set_to_json(const VertexSet& s, bool one_based) {
  Json out = Json::array();
  for (int v : s) out.push_back(v + (one_based ? 1 : 0));
  return out;
}

Json chronicle_to_json(const ForcingChronicle& c) {
  Json events = Json::array();
  for (const auto& e : c.events) events.push_back({{"round", e.round}, {"forcer", e.forcer + 1}, {"forced", e.forced + 1}});
  Json chains = Json::array();
  for (const auto& chain : c.chains) {
    Json row = Json::array();
    for (int v : chain) row.push_back(v + 1);
    chains.push_back(std::move(row));
  }
  return Json{{"rounds", c.rounds()}, {"events", std::move(events)}, {"chains", std::move(chains)}};
}

namespace {

Json entry_to_json(const AuditEntry& e) {
  Json details = Json::object();
  for (const auto& d : e.details) details[d.name] = d.value;
  Json out{{"check", e.check_id}, {"instance", e.instance.key}, {"status", std::string(to_string(e.status))}, {"details", std::move(details)}};
  if (e.witness) out["witness"] = set_to_json(*e.witness, false);
  if (!e.note.empty()) out["note"] = e.note;
  if (e.status != Status::pass) {
    out["graph"] = graph_to_json(e.instance.graph);
    if (e.instance.function) out["function"] = function_to_json(*e.instance.function);
    out["params"] = e.instance.params;
  }
  return out;
}

}  // namespace

Json report_to_json(const AuditReport& report) {
  Json coverage = Json::array();
  for (const auto& c : report.coverage)
    coverage.push_back({{"label", c.label}, {"enumerated", c.enumerated}, {"expected", c.expected}});
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(entry_to_json(e));
  return Json{{"suite", report.suite},
              {"seed", report.seed},
              {"summary",
               {{"pass", report.count(Status::pass)},
                {"fail", report.count(Status::fail)},
                {"observation", report.count(Status::observation)},
                {"passed", report.passed()}}},
              {"coverage", std::move(coverage)},
              {"entries", std::move(entries)}};
}

AuditEntry entry_from_json(const Json& j) {
  try {
    AuditEntry e;
    e.check_id = j.at("check").get<std::string>();
    e.instance.key = j.at("instance").get<std::string>();
    const auto status = parse_status(j.at("status").get<std::string>());
    if (!status) throw InputError("unknown status in report entry");
    e.status = *status;
    e.instance.graph = graph_from_json(j.at("graph"));
    if (j.contains("function")) e.instance.function = function_from_json(j.at("function"));
    if (j.contains("params")) e.instance.params = j.at("params").get<std::vector<int>>();
    for (const auto& [name, value] : j.at("details").items()) e.details.push_back({name, value.get<long long>()});
    if (j.contains("note")) e.note = j.at("note").get<std::string>();
    return e;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed report entry: ") + ex.what());
  }
}

}  // namespace zf::cli
