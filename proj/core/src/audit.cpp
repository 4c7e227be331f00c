#include <algorithm>
#include <numeric>

#include "audit_internal.hpp"
#include "zf/audit.hpp"
#include "zf/errors.hpp"
#include "zf/families.hpp"
#include "zf/parallel.hpp"
#include "zf/random_graphs.hpp"

namespace zf {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::observation: return "observation";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "observation") return Status::observation;
  return std::nullopt;
}

std::optional<long long> AuditEntry::detail(std::string_view name) const {
  for (const auto& d : details)
    if (d.name == name) return d.value;
  return std::nullopt;
}

int AuditReport::count(Status status) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.status == status; }));
}

bool AuditReport::passed() const {
  if (count(Status::fail) > 0) return false;
  return std::all_of(coverage.begin(), coverage.end(), [](const auto& c) { return c.enumerated == c.expected; });
}

void AuditReport::append(AuditReport other) {
  entries.insert(entries.end(), std::make_move_iterator(other.entries.begin()), std::make_move_iterator(other.entries.end()));
  coverage.insert(coverage.end(), other.coverage.begin(), other.coverage.end());
}

namespace detail {

std::vector<AuditEntry> run_jobs(const std::vector<AuditJob>& work, const Limits& limits, int jobs) {
  auto chunks = parallel_map(work.size(), jobs, [&](std::size_t i) {
    return evaluate_checks(work[i].checks, work[i].instance, limits);
  });
  std::vector<AuditEntry> out;
  for (auto& chunk : chunks)
    for (auto& entry : chunk) out.push_back(std::move(entry));
  return out;
}

std::string graph_key(const Graph& g) {
  if (!g.name().empty()) return g.name();
  return "G(n=" + std::to_string(g.order()) + ",m=" + std::to_string(g.size()) + ")";
}

std::string functigraph_key(const Graph& g, const VertexFunction& f) {
  return "C(" + graph_key(g) + "; " + format_images(f) + ")";
}

std::vector<std::string_view> graph_checks(const Graph& g) {
  std::vector<std::string_view> ids;
  if (g.order() == 0) return ids;
  ids.push_back("min-degree");
  ids.push_back("path-cover");
  const auto tags = classify(g);
  if (tags.tree) ids.push_back("tree-equality");
  if (tags.unicyclic) ids.push_back("unicyclic-equality");
  if (g.order() >= 2 && is_connected(g)) {
    ids.push_back("path-characterization");
    ids.push_back("complete-characterization");
  }
  if (strongly_regular_params(g)) ids.push_back("srg-bound");
  return ids;
}

}  // namespace detail

using detail::AuditJob;
using detail::functigraph_key;
using detail::graph_key;

AuditReport audit_graph(const Graph& g, const Limits& limits) {
  AuditReport report;
  report.suite = "graph";
  const auto ids = detail::graph_checks(g);
  report.entries = evaluate_checks(ids, AuditInstance{graph_key(g), g, std::nullopt, {}}, limits);
  return report;
}

AuditEntry audit_cut_vertex(const Graph& g, int v, const Limits& limits) {
  if (v < 0 || v >= g.order() || !cut_vertices(g).contains(v))
    throw PreconditionError("vertex " + std::to_string(v) + " is not a cut vertex");
  return evaluate_check("cut-vertex", AuditInstance{graph_key(g) + " @" + std::to_string(v), g, std::nullopt, {v}}, limits);
}

namespace detail {

std::vector<std::string_view> functigraph_checks(const VertexFunction& f) {
  std::vector<std::string_view> ids{"functigraph-bounds"};
  if (f.is_permutation()) ids.push_back("permutation-upper");
  if (f.is_identity()) {
    ids.push_back("identity-upper");
    ids.push_back("identity-conjecture");
  }
  return ids;
}

}  // namespace detail

AuditReport audit_functigraph(const Graph& g, const VertexFunction& f, const Limits& limits) {
  if (g.order() < 3 || !is_connected(g)) throw PreconditionError("functigraph audit needs a connected base of order >= 3");
  AuditReport report;
  report.suite = "functigraph";
  const auto ids = detail::functigraph_checks(f);
  report.entries = evaluate_checks(ids, AuditInstance{functigraph_key(g, f), g, f, {}}, limits);
  return report;
}

AuditReport audit_complete_family(int n, const Limits& limits, int jobs) {
  if (n < 3) throw PreconditionError("complete-graph audit needs n >= 3");
  enforce_cap(n, limits.max_complete_audit, "complete-graph audit");
  const Graph base = complete_graph(n);
  std::vector<AuditJob> work;
  FunctionStream stream(n, FunctionFilter::everything(), {limits.max_all_functions, limits.max_permutations});
  while (auto f = stream.next()) work.push_back({{functigraph_key(base, *f), base, *f, {}}, {"complete-formula", "functigraph-bounds"}});
  AuditReport report;
  report.suite = "complete";
  report.coverage.push_back({"K_" + std::to_string(n) + " functions", work.size(), function_count(n, FunctionFilter::everything())});
  report.entries = detail::run_jobs(work, limits, jobs);
  return report;
}

namespace {

enum class Shape { cycle, path };

VertexFunction random_permutation(int n, Rng& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(images[i], images[uniform_below(rng, i + 1)]);
  return VertexFunction(std::move(images));
}

VertexFunction random_function(int n, Rng& rng) {
  std::vector<int> images(n);
  for (auto& x : images) x = uniform_below(rng, n);
  return VertexFunction(std::move(images));
}

AuditReport shape_family(Shape shape, int n, const Sampling& mode, const Limits& limits, int jobs) {
  if (n < 3) throw PreconditionError("family audit needs n >= 3");
  const bool cycle = shape == Shape::cycle;
  const std::string prefix = cycle ? "cycle" : "path";
  const Graph base = cycle ? cycle_graph(n) : path_graph(n);
  const std::string_view id_check = cycle ? "cycle-identity" : "path-identity";
  const std::string_view const_check = cycle ? "cycle-constant" : "path-constant";
  const std::string_view range_check = cycle ? "cycle-range" : "path-range";
  const std::string_view perm_check = cycle ? "cycle-permutation" : "path-permutation";

  std::vector<AuditJob> work;
  auto add = [&](const VertexFunction& f) {
    std::vector<std::string_view> ids{"functigraph-bounds"};
    const int s = f.range_size();
    if (f.is_permutation()) ids.push_back(perm_check);
    if (f.is_identity()) ids.push_back(id_check);
    if (s == 1) ids.push_back(const_check);
    if (1 < s && s < n) ids.push_back(range_check);
    work.push_back({{functigraph_key(base, f), base, f, {}}, std::move(ids)});
  };

  AuditReport report;
  report.suite = prefix;
  const EnumerationCaps caps{limits.max_all_functions, limits.max_permutations};
  if (mode.exhaustive) {
    enforce_cap(n, limits.max_all_functions, "exhaustive family audit");
    FunctionStream stream(n, FunctionFilter::everything(), caps);
    std::uint64_t seen = 0;
    while (auto f = stream.next()) {
      add(*f);
      ++seen;
    }
    report.coverage.push_back({base.name() + " functions", seen, function_count(n, FunctionFilter::everything())});
  } else {
    report.seed = mode.seed;
    Rng rng(mode.seed);
    for (int t = 0; t < n; ++t) add(VertexFunction::constant(n, t));
    for (int drawn = 0; drawn < mode.count;) {
      auto f = random_function(n, rng);
      if (f.range_size() > 1 && f.range_size() < n) {
        add(f);
        ++drawn;
      }
    }
    if (n <= limits.max_exhaustive_permutation_audit) {
      FunctionStream perms(n, FunctionFilter::permutations_only(), caps);
      std::uint64_t seen = 0;
      while (auto f = perms.next()) {
        add(*f);
        ++seen;
      }
      report.coverage.push_back({base.name() + " permutations", seen, function_count(n, FunctionFilter::permutations_only())});
    } else {
      add(VertexFunction::identity(n));
      for (int i = 0; i < mode.count; ++i) add(random_permutation(n, rng));
    }
  }

  const auto low = named_construction(prefix + "-low", n);
  work.push_back({{functigraph_key(low.base, low.func), low.base, low.func, {}}, {cycle ? "cycle-low-sharp" : "path-low-sharp"}});
  for (int k = 3; k * k <= n; ++k)
    if (k * k == n) {
      const auto mod = mod_function(k);
      work.push_back({{functigraph_key(base, mod), base, mod, {k}}, {cycle ? "cycle-mod-sharp" : "path-mod-sharp"}});
    }

  report.entries = detail::run_jobs(work, limits, jobs);
  return report;
}

}  // namespace

AuditReport audit_cycle_family(int n, const Sampling& mode, const Limits& limits, int jobs) {
  return shape_family(Shape::cycle, n, mode, limits, jobs);
}

AuditReport audit_path_family(int n, const Sampling& mode, const Limits& limits, int jobs) {
  return shape_family(Shape::path, n, mode, limits, jobs);
}

AuditReport audit_product(ProductKind kind, int s, int t, const Limits& limits) {
  const bool paths = kind == ProductKind::path_path;
  if (t < 2 || s < (paths ? 2 : 3)) throw PreconditionError("product dimensions below the closed-form range");
  enforce_cap(s * t, limits.max_product_order, "product audit");
  const Graph left = paths ? path_graph(s) : cycle_graph(s);
  const Graph right = path_graph(t);
  Graph product = cartesian_product(left, right);
  const std::string key = left.name() + " x " + right.name();
  product.set_name(key);
  AuditReport report;
  report.suite = "product";
  const std::string_view ids[] = {"product-formula", "product-upper"};
  report.entries = evaluate_checks(ids, AuditInstance{key, product, std::nullopt, {paths ? 0 : 1, s, t}}, limits);
  return report;
}

AuditReport audit_deletion(const Graph& g, int samples, std::uint64_t seed, const Limits& limits) {
  Rng rng(seed);
  std::vector<int> vertices(g.order());
  std::iota(vertices.begin(), vertices.end(), 0);
  auto edges = g.edges();
  for (int i = static_cast<int>(vertices.size()) - 1; i > 0; --i) std::swap(vertices[i], vertices[uniform_below(rng, i + 1)]);
  for (int i = static_cast<int>(edges.size()) - 1; i > 0; --i) std::swap(edges[i], edges[uniform_below(rng, i + 1)]);
  vertices.resize(std::min<std::size_t>(vertices.size(), static_cast<std::size_t>(std::max(samples, 0))));
  edges.resize(std::min<std::size_t>(edges.size(), static_cast<std::size_t>(std::max(samples, 0))));

  AuditReport report;
  report.suite = "deletion";
  report.seed = seed;
  const auto key = graph_key(g);
  for (int v : vertices)
    report.entries.push_back(evaluate_check("vertex-deletion", {key + " -v" + std::to_string(v), g, std::nullopt, {v}}, limits));
  for (const auto& e : edges)
    report.entries.push_back(evaluate_check(
        "edge-deletion", {key + " -e" + std::to_string(e.a) + "-" + std::to_string(e.b), g, std::nullopt, {e.a, e.b}}, limits));
  return report;
}

AuditReport audit_construction(std::string_view name, int k, const Limits& limits) {
  const auto fg = named_construction(name, k);
  std::vector<std::string_view> ids;
  std::vector<int> params;
  if (name == "bouquet") ids = {"bouquet-gap"}, params = {k};
  else if (name == "path-swap") ids = {"swap-gap"}, params = {k};
  else if (name == "cycle-mod") ids = {"cycle-mod-sharp"}, params = {k};
  else if (name == "path-mod") ids = {"path-mod-sharp"}, params = {k};
  else if (name == "cycle-low") ids = {"cycle-low-sharp"};
  else if (name == "path-low") ids = {"path-low-sharp"};
  else ids = {"cycle-permutation", "functigraph-bounds"};
  AuditReport report;
  report.suite = "construction";
  report.entries = evaluate_checks(ids, AuditInstance{std::string(name) + "(k=" + std::to_string(k) + ") " + functigraph_key(fg.base, fg.func), fg.base, fg.func, params}, limits);
  return report;
}

AuditReport audit_gap_examples(int k, const Limits& limits) {
  if (k < 2) throw PreconditionError("gap examples need k >= 2");
  AuditReport report;
  report.suite = "gaps";
  if (k >= 3) report.append(audit_construction("bouquet", k, limits));
  report.append(audit_construction("path-swap", k, limits));
  return report;
}

}  // namespace zf
