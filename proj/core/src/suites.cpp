#include <array>

#include "audit_internal.hpp"
#include "zf/audit.hpp"
#include "zf/errors.hpp"
#include "zf/families.hpp"
#include "zf/parallel.hpp"
#include "zf/random_graphs.hpp"

namespace zf {
namespace {

using detail::AuditJob;

constexpr std::array<std::string_view, 10> kSuites = {"graph", "complete", "cycle",      "path",        "product",
                                                      "deletion", "gaps",  "conjecture", "functigraph", "all"};

// Stream ids so the random libraries of different suites do not overlap.
enum : std::uint64_t { kConnected = 101, kTrees = 102, kUnicyclic = 103, kDeletion = 104, kConjecture = 105, kPairs = 106 };

std::vector<Graph> family_library(int min_n, int max_n) {
  std::vector<Graph> out;
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    out.push_back(path_graph(n));
    if (n >= 3) out.push_back(cycle_graph(n));
    if (n >= 4) out.push_back(complete_graph(n));  // K_2 = P_2, K_3 = C_3
    if (n >= 4) out.push_back(star_graph(n - 1));  // K_{1,2} = P_3
    if (n >= 5 && n % 2 == 1) out.push_back(bouquet_graph((n - 1) / 2));
  }
  if (min_n <= 10 && 10 <= max_n) out.push_back(petersen_graph());
  return out;
}

void add_graph_jobs(const Graph& g, std::vector<AuditJob>& work) {
  const auto key = detail::graph_key(g);
  work.push_back({{key, g, std::nullopt, {}}, detail::graph_checks(g)});
  for (int v : cut_vertices(g)) work.push_back({{key + " @" + std::to_string(v), g, std::nullopt, {v}}, {"cut-vertex"}});
}

AuditReport graph_suite(const SuiteOptions& o) {
  const int lo = o.n.value_or(2);
  const int hi = o.n.value_or(9);
  std::vector<AuditJob> work;
  for (const auto& g : family_library(lo, o.n ? hi : 10)) add_graph_jobs(g, work);
  for (const auto& g : random_connected_library(o.samples.value_or(100), lo, hi, derive_seed(o.seed, kConnected))) add_graph_jobs(g, work);
  for (const auto& g : random_tree_library(50, lo, hi, derive_seed(o.seed, kTrees))) add_graph_jobs(g, work);
  if (hi >= 3)
    for (const auto& g : random_unicyclic_library(30, std::max(lo, 3), hi, derive_seed(o.seed, kUnicyclic))) add_graph_jobs(g, work);
  AuditReport report;
  report.entries = detail::run_jobs(work, o.limits, o.jobs);
  return report;
}

AuditReport complete_suite(const SuiteOptions& o) {
  AuditReport report;
  for (int n : o.n ? std::vector<int>{*o.n} : std::vector<int>{3, 4, 5}) report.append(audit_complete_family(n, o.limits, o.jobs));
  return report;
}

AuditReport shape_suite(const SuiteOptions& o, bool cycle) {
  AuditReport report;
  const auto orders = o.n ? std::vector<int>{*o.n} : std::vector<int>{3, 4, 5, 6, 7, 8};
  for (int n : orders) {
    const Sampling mode = n <= 5 && n <= o.limits.max_all_functions
                              ? Sampling::all()
                              : Sampling::sampled(o.samples.value_or(200), derive_seed(o.seed, static_cast<std::uint64_t>(n)));
    report.append(cycle ? audit_cycle_family(n, mode, o.limits, o.jobs) : audit_path_family(n, mode, o.limits, o.jobs));
  }
  if (!o.n) {
    report.append(audit_construction(cycle ? "cycle-mod" : "path-mod", 3, o.limits));
    if (cycle) report.append(audit_construction("pentagram", 5, o.limits));
  }
  return report;
}

AuditReport product_suite(const SuiteOptions& o) {
  std::vector<std::pair<ProductKind, std::pair<int, int>>> table;
  for (int s = 2; s <= 4; ++s)
    for (int t = 2; t <= 4; ++t) table.push_back({ProductKind::path_path, {s, t}});
  for (int s = 3; s <= 6; ++s)
    for (int t = 2; t <= 3; ++t)
      if (s * t <= 18) table.push_back({ProductKind::cycle_path, {s, t}});
  auto parts = parallel_map(table.size(), o.jobs, [&](std::size_t i) {
    return audit_product(table[i].first, table[i].second.first, table[i].second.second, o.limits);
  });
  AuditReport report;
  for (auto& part : parts) report.append(std::move(part));
  return report;
}

AuditReport deletion_suite(const SuiteOptions& o) {
  const auto graphs = random_connected_library(o.samples.value_or(100), o.n.value_or(2), o.n.value_or(9), derive_seed(o.seed, kDeletion));
  auto parts = parallel_map(graphs.size(), o.jobs, [&](std::size_t i) {
    return audit_deletion(graphs[i], 3, derive_seed(o.seed, 1000 + i), o.limits);
  });
  AuditReport report;
  for (auto& part : parts) report.append(std::move(part));
  return report;
}

AuditReport gaps_suite(const SuiteOptions& o) {
  AuditReport report;
  report.append(audit_gap_examples(2, o.limits));
  report.append(audit_gap_examples(3, o.limits));
  return report;
}

AuditJob functigraph_job(const Graph& g, const VertexFunction& f) {
  return {{detail::functigraph_key(g, f), g, f, {}}, detail::functigraph_checks(f)};
}

AuditReport conjecture_suite(const SuiteOptions& o) {
  const int lo = o.n.value_or(3);
  const int hi = o.n.value_or(6);
  if (lo < 3) throw InputError("conjecture suite needs n >= 3");
  std::vector<AuditJob> work;
  for (const auto& g : family_library(lo, hi)) work.push_back(functigraph_job(g, VertexFunction::identity(g.order())));
  for (const auto& g : random_connected_library(o.samples.value_or(50), lo, hi, derive_seed(o.seed, kConjecture)))
    work.push_back(functigraph_job(g, VertexFunction::identity(g.order())));
  AuditReport report;
  report.entries = detail::run_jobs(work, o.limits, o.jobs);
  return report;
}

AuditReport functigraph_suite(const SuiteOptions& o) {
  const int lo = o.n.value_or(3);
  const int hi = o.n.value_or(6);
  if (lo < 3) throw InputError("functigraph suite needs n >= 3");
  std::vector<AuditJob> work;
  for (int n = lo; n <= hi; ++n) {
    const Graph k = complete_graph(n);
    work.push_back(functigraph_job(k, VertexFunction::identity(n)));
    work.push_back(functigraph_job(k, VertexFunction::constant(n, 0)));
  }
  const auto bases = random_connected_library(o.samples.value_or(500), lo, hi, derive_seed(o.seed, kPairs));
  for (std::size_t i = 0; i < bases.size(); ++i) {
    Rng rng(derive_seed(o.seed, 5000 + i));
    const int n = bases[i].order();
    std::vector<int> images(n);
    const int kind = uniform_below(rng, 10);
    for (int j = 0; j < n; ++j) images[j] = kind == 0 ? j : kind == 1 ? 0 : uniform_below(rng, n);
    if (kind == 2 || kind == 3) {
      for (int j = 0; j < n; ++j) images[j] = j;
      for (int j = n - 1; j > 0; --j) std::swap(images[j], images[uniform_below(rng, j + 1)]);
    }
    work.push_back(functigraph_job(bases[i], VertexFunction(std::move(images))));
  }
  AuditReport report;
  report.entries = detail::run_jobs(work, o.limits, o.jobs);
  return report;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

AuditReport run_suite(std::string_view name, const SuiteOptions& options) {
  AuditReport report;
  if (name == "graph") report = graph_suite(options);
  else if (name == "complete") report = complete_suite(options);
  else if (name == "cycle") report = shape_suite(options, true);
  else if (name == "path") report = shape_suite(options, false);
  else if (name == "product") report = product_suite(options);
  else if (name == "deletion") report = deletion_suite(options);
  else if (name == "gaps") report = gaps_suite(options);
  else if (name == "conjecture") report = conjecture_suite(options);
  else if (name == "functigraph") report = functigraph_suite(options);
  else if (name == "all") {
    for (auto suite : kSuites)
      if (suite != "all") report.append(run_suite(suite, options));
  } else {
    throw InputError("unknown audit suite '" + std::string(name) + "'");
  }
  report.suite = std::string(name);
  report.seed = options.seed;
  return report;
}

}  // namespace zf
