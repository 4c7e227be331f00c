#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "zf/audit.hpp"
#include "zf/errors.hpp"
#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/path_cover.hpp"

namespace zf {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Lazily computed quantities shared by the checks run on one instance.
class Measurements {
 public:
  Measurements(const AuditInstance& instance, const Limits& limits) : instance_(instance), limits_(limits) {}

  const Graph& graph() const { return instance_.graph; }
  int n() const { return instance_.graph.order(); }

  const VertexFunction& function() const {
    require(instance_.function.has_value(), "check needs a vertex function");
    return *instance_.function;
  }

  int param(std::size_t i) const {
    require(i < instance_.params.size(), "check needs parameter #" + std::to_string(i));
    return instance_.params[i];
  }

  const ZResult& graph_z() {
    if (!graph_z_) graph_z_ = exact_z(graph());
    return *graph_z_;
  }

  int graph_p() {
    if (!graph_p_) graph_p_ = path_cover_number(graph(), limits_.max_path_cover_order).p;
    return *graph_p_;
  }

  const Graph& whole() {
    if (!whole_) whole_ = build_functigraph(graph(), function()).whole;
    return *whole_;
  }

  const ZResult& whole_z() {
    if (!whole_z_) whole_z_ = exact_z(whole());
    return *whole_z_;
  }

  ZResult exact_z(const Graph& g) const {
    enforce_cap(g.order(), limits_.max_exact_order, "zero forcing number");
    return zero_forcing_number(g);
  }

  const Classification& tags() {
    if (!tags_) tags_ = classify(graph());
    return *tags_;
  }

 private:
  const AuditInstance& instance_;
  const Limits& limits_;
  std::optional<ZResult> graph_z_;
  std::optional<int> graph_p_;
  std::optional<Graph> whole_;
  std::optional<ZResult> whole_z_;
  std::optional<Classification> tags_;
};

using CheckFn = std::function<void(Measurements&, AuditEntry&)>;

void put(AuditEntry& e, std::string name, long long value) { e.details.push_back({std::move(name), value}); }

void verdict(AuditEntry& e, bool ok, std::string failure_note) {
  e.status = ok ? Status::pass : Status::fail;
  if (!ok) e.note = std::move(failure_note);
}

// Records z and s for functigraph checks and returns z.
int functigraph_z(Measurements& m, AuditEntry& e) {
  const auto& zr = m.whole_z();
  put(e, "n", m.n());
  put(e, "s", m.function().range_size());
  put(e, "z", zr.z);
  e.witness = zr.witness;
  return zr.z;
}

int graph_z(Measurements& m, AuditEntry& e) {
  const auto& zr = m.graph_z();
  put(e, "n", m.n());
  put(e, "z", zr.z);
  e.witness = zr.witness;
  return zr.z;
}

void require_connected_base(Measurements& m) {
  require(m.n() >= 3 && is_connected(m.graph()), "functigraph checks need a connected base of order >= 3");
}

void require_base(Measurements& m, const Graph& expected, const char* what) {
  require(m.graph() == expected, std::string("base graph must be the canonical ") + what);
}

void require_cycle_base(Measurements& m) {
  require(m.n() >= 3, "cycle base needs n >= 3");
  require_base(m, cycle_graph(m.n()), "cycle");
}

void require_path_base(Measurements& m) {
  require(m.n() >= 3, "path base needs n >= 3");
  require_base(m, path_graph(m.n()), "path");
}

std::string range_note(int z, int lo, int hi) {
  return "z=" + std::to_string(z) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::string equal_note(int z, int expected) {
  return "z=" + std::to_string(z) + ", expected " + std::to_string(expected);
}

// Permutations sigma of P_n for which Z(C(P_n, sigma)) = n: for n = 3 every
// sigma whose functigraph is not the ladder P_3 x P_2 (the ladder arises from
// the identity and the reversal); for n = 4 the class of (3,4,1,2) under the
// reversal symmetries, which is {(3,4,1,2), (2,1,4,3)}.
bool path_permutation_extremal(const VertexFunction& sigma) {
  const auto& images = sigma.images();
  if (sigma.order() == 3) return images != std::vector<int>{0, 1, 2} && images != std::vector<int>{2, 1, 0};
  if (sigma.order() == 4) return images == std::vector<int>{2, 3, 0, 1} || images == std::vector<int>{1, 0, 3, 2};
  return false;
}

const std::map<std::string, CheckFn, std::less<>>& registry() {
  static const std::map<std::string, CheckFn, std::less<>> checks = {
      // ---- plain graph checks
      {"min-degree",
       [](Measurements& m, AuditEntry& e) {
         require(m.n() >= 1, "needs a nonempty graph");
         const int z = graph_z(m, e);
         const int delta = min_degree(m.graph());
         put(e, "delta", delta);
         verdict(e, z >= delta, "Z below minimum degree");
       }},
      {"path-cover",
       [](Measurements& m, AuditEntry& e) {
         const int z = graph_z(m, e);
         const int p = m.graph_p();
         put(e, "p", p);
         verdict(e, p <= z, "path cover number exceeds Z");
       }},
      {"tree-equality",
       [](Measurements& m, AuditEntry& e) {
         require(m.tags().tree, "graph is not a tree");
         const int z = graph_z(m, e);
         const int p = m.graph_p();
         put(e, "p", p);
         verdict(e, p == z, "P != Z on a tree");
       }},
      {"unicyclic-equality",
       [](Measurements& m, AuditEntry& e) {
         require(m.tags().unicyclic, "graph is not unicyclic");
         const int z = graph_z(m, e);
         const int p = m.graph_p();
         put(e, "p", p);
         verdict(e, p == z, "P != Z on a unicyclic graph");
       }},
      {"path-characterization",
       [](Measurements& m, AuditEntry& e) {
         require(m.n() >= 2 && is_connected(m.graph()), "needs a connected graph with n >= 2");
         const int z = graph_z(m, e);
         const bool is_path = m.tags().path;
         put(e, "is_path", is_path);
         verdict(e, (z == 1) == is_path, "Z = 1 does not coincide with being a path");
       }},
      {"complete-characterization",
       [](Measurements& m, AuditEntry& e) {
         require(m.n() >= 2 && is_connected(m.graph()), "needs a connected graph with n >= 2");
         const int z = graph_z(m, e);
         const bool complete = m.tags().complete;
         put(e, "is_complete", complete);
         verdict(e, (z == m.n() - 1) == complete, "Z = n-1 does not coincide with being complete");
       }},
      {"srg-bound",
       [](Measurements& m, AuditEntry& e) {
         const auto srg = strongly_regular_params(m.graph());
         require(srg.has_value(), "graph is not strongly regular");
         const int z = graph_z(m, e);
         put(e, "k", srg->k);
         put(e, "alpha", srg->alpha);
         put(e, "beta", srg->beta);
         put(e, "bound", m.n() / 2);
         verdict(e, z >= m.n() / 2, "Z below floor(n/2) on a strongly regular graph");
       }},
      {"cut-vertex",
       [](Measurements& m, AuditEntry& e) {
         const int v = m.param(0);
         require(v >= 0 && v < m.n() && cut_vertices(m.graph()).contains(v), "parameter is not a cut vertex");
         VertexSet rest = m.graph().vertices();
         rest.erase(v);
         const auto parts = connected_components(m.graph(), rest);
         long long sum = 0;
         for (auto part : parts) {
           part.insert(v);
           sum += m.exact_z(induced_subgraph(m.graph(), part).graph).z;
         }
         const long long k = static_cast<long long>(parts.size());
         const long long bound = sum - k + 1;
         const int z = graph_z(m, e);
         put(e, "vertex", v);
         put(e, "components", k);
         put(e, "bound", bound);
         verdict(e, z >= bound, "Z below the cut-vertex bound");
       }},
      {"vertex-deletion",
       [](Measurements& m, AuditEntry& e) {
         const int v = m.param(0);
         require(v >= 0 && v < m.n(), "vertex parameter out of range");
         const int z = graph_z(m, e);
         const int z_minus = m.exact_z(remove_vertex(m.graph(), v)).z;
         put(e, "vertex", v);
         put(e, "z_minus", z_minus);
         verdict(e, std::abs(z - z_minus) <= 1, "vertex deletion changed Z by more than 1");
       }},
      {"edge-deletion",
       [](Measurements& m, AuditEntry& e) {
         const int a = m.param(0);
         const int b = m.param(1);
         require(a >= 0 && b >= 0 && a < m.n() && b < m.n() && m.graph().adjacent(a, b), "parameters are not an edge");
         const int z = graph_z(m, e);
         Graph without = m.graph();
         without.remove_edge(a, b);
         const int z_minus = m.exact_z(without).z;
         put(e, "a", a);
         put(e, "b", b);
         put(e, "z_minus", z_minus);
         verdict(e, std::abs(z - z_minus) <= 1, "edge deletion changed Z by more than 1");
       }},

      // ---- general functigraph bounds
      {"functigraph-bounds",
       [](Measurements& m, AuditEntry& e) {
         require_connected_base(m);
         const int z = functigraph_z(m, e);
         const int lower = 1 + min_degree(m.graph());
         const int upper = 2 * m.n() - 2;
         put(e, "lower", lower);
         put(e, "upper", upper);
         verdict(e, lower <= z && z <= upper, range_note(z, lower, upper));
       }},
      {"permutation-upper",
       [](Measurements& m, AuditEntry& e) {
         require_connected_base(m);
         require(m.function().is_permutation(), "function is not a permutation");
         const int z = functigraph_z(m, e);
         const int lower = 1 + min_degree(m.graph());
         put(e, "lower", lower);
         put(e, "upper", m.n());
         verdict(e, lower <= z && z <= m.n(), range_note(z, lower, m.n()));
       }},
      {"identity-upper",
       [](Measurements& m, AuditEntry& e) {
         require(m.n() >= 3, "needs n >= 3");
         require(m.function().is_identity(), "function is not the identity");
         const int z = functigraph_z(m, e);
         const int z_base = m.graph_z().z;
         const int upper = std::min(2 * z_base, m.n());
         put(e, "z_base", z_base);
         put(e, "upper", upper);
         verdict(e, z <= upper, "Z(C(G,id)) exceeds min{2Z(G), n}");
       }},
      {"identity-conjecture",
       [](Measurements& m, AuditEntry& e) {
         require(m.n() >= 3, "needs n >= 3");
         require(m.function().is_identity(), "function is not the identity");
         const int z = functigraph_z(m, e);
         const int z_base = m.graph_z().z;
         const int margin = z - z_base - 1;
         put(e, "z_base", z_base);
         put(e, "margin", margin);
         e.status = Status::observation;
         e.note = margin >= 0 ? "Z(C(G,id)) >= Z(G)+1 holds" : "COUNTEREXAMPLE: Z(C(G,id)) < Z(G)+1";
       }},

      // ---- complete graphs
      {"complete-formula",
       [](Measurements& m, AuditEntry& e) {
         require(m.n() >= 3, "needs n >= 3");
         require_base(m, complete_graph(m.n()), "complete graph");
         const int z = functigraph_z(m, e);
         const int n = m.n();
         const int s = m.function().range_size();
         const int expected = s == n ? n : s == 1 ? 2 * n - 2 : 2 * n - s - 1;
         put(e, "expected", expected);
         verdict(e, z == expected, equal_note(z, expected));
       }},

      // ---- cycles
      {"cycle-identity",
       [](Measurements& m, AuditEntry& e) {
         require_cycle_base(m);
         require(m.function().is_identity(), "function is not the identity");
         const int z = functigraph_z(m, e);
         const int expected = m.n() == 3 ? 3 : 4;
         put(e, "expected", expected);
         verdict(e, z == expected, equal_note(z, expected));
       }},
      {"cycle-constant",
       [](Measurements& m, AuditEntry& e) {
         require_cycle_base(m);
         require(m.function().is_constant(), "function is not constant");
         const int z = functigraph_z(m, e);
         put(e, "expected", 4);
         verdict(e, z == 4, equal_note(z, 4));
       }},
      {"cycle-range",
       [](Measurements& m, AuditEntry& e) {
         require_cycle_base(m);
         const int s = m.function().range_size();
         require(1 < s && s < m.n(), "needs 1 < |Range(f)| < n");
         const int z = functigraph_z(m, e);
         put(e, "lower", 3);
         put(e, "upper", s + 2);
         verdict(e, 3 <= z && z <= s + 2, range_note(z, 3, s + 2));
       }},
      {"cycle-permutation",
       [](Measurements& m, AuditEntry& e) {
         require_cycle_base(m);
         require(m.function().is_permutation(), "function is not a permutation");
         const int n = m.n();
         const int z = functigraph_z(m, e);
         const bool petersen = strongly_regular_params(m.whole()) == SrgParams{10, 3, 0, 1};
         put(e, "petersen", petersen);
         const bool in_range = 3 <= z && z <= n;
         const bool three_ok = (z == 3) == (n == 3);
         const bool top_ok = (z == n) == (n <= 4 || petersen);
         verdict(e, in_range && three_ok && top_ok,
                 !in_range ? range_note(z, 3, n)
                 : !three_ok ? "Z = 3 does not coincide with n = 3"
                             : "Z = n does not coincide with n <= 4 or the Petersen graph");
       }},
      {"cycle-mod-sharp",
       [](Measurements& m, AuditEntry& e) {
         const int k = m.param(0);
         require(k >= 3, "needs k >= 3");
         require_base(m, cycle_graph(k * k), "cycle C_{k^2}");
         require(m.function() == mod_function(k), "function is not mod:k");
         const int z = functigraph_z(m, e);
         put(e, "expected", k + 2);
         verdict(e, z == k + 2, equal_note(z, k + 2));
       }},
      {"cycle-low-sharp",
       [](Measurements& m, AuditEntry& e) {
         require_cycle_base(m);
         require(m.function() == named_construction("cycle-low", m.n()).func, "function is not the lower-bound construction");
         const int z = functigraph_z(m, e);
         put(e, "expected", 3);
         verdict(e, z == 3, equal_note(z, 3));
       }},

      // ---- paths
      {"path-identity",
       [](Measurements& m, AuditEntry& e) {
         require_path_base(m);
         require(m.function().is_identity(), "function is not the identity");
         const int z = functigraph_z(m, e);
         put(e, "expected", 2);
         verdict(e, z == 2, equal_note(z, 2));
       }},
      {"path-constant",
       [](Measurements& m, AuditEntry& e) {
         require_path_base(m);
         require(m.function().is_constant(), "function is not constant");
         const int z = functigraph_z(m, e);
         put(e, "expected", 2);
         verdict(e, z == 2, equal_note(z, 2));
       }},
      {"path-range",
       [](Measurements& m, AuditEntry& e) {
         require_path_base(m);
         const int s = m.function().range_size();
         require(1 < s && s < m.n(), "needs 1 < |Range(f)| < n");
         const int z = functigraph_z(m, e);
         put(e, "lower", 2);
         put(e, "upper", s + 1);
         verdict(e, 2 <= z && z <= s + 1, range_note(z, 2, s + 1));
       }},
      {"path-permutation",
       [](Measurements& m, AuditEntry& e) {
         require_path_base(m);
         require(m.function().is_permutation(), "function is not a permutation");
         const int n = m.n();
         const int z = functigraph_z(m, e);
         const bool extremal = path_permutation_extremal(m.function());
         put(e, "extremal_class", extremal);
         const bool in_range = 2 <= z && z <= n;
         const bool top_ok = (z == n) == extremal;
         verdict(e, in_range && top_ok, !in_range ? range_note(z, 2, n) : "Z = n does not coincide with the extremal class");
       }},
      {"path-mod-sharp",
       [](Measurements& m, AuditEntry& e) {
         const int k = m.param(0);
         require(k >= 3, "needs k >= 3");
         require_base(m, path_graph(k * k), "path P_{k^2}");
         require(m.function() == mod_function(k), "function is not mod:k");
         const int z = functigraph_z(m, e);
         put(e, "expected", k + 1);
         verdict(e, z == k + 1, equal_note(z, k + 1));
       }},
      {"path-low-sharp",
       [](Measurements& m, AuditEntry& e) {
         require_path_base(m);
         require(m.function() == named_construction("path-low", m.n()).func, "function is not the lower-bound construction");
         const int z = functigraph_z(m, e);
         put(e, "expected", 2);
         verdict(e, z == 2, equal_note(z, 2));
       }},

      // ---- Z(G) versus Z(C(G,f)) gaps
      {"bouquet-gap",
       [](Measurements& m, AuditEntry& e) {
         const int k = m.param(0);
         require(k >= 3, "needs k >= 3");
         require_base(m, bouquet_graph(k), "bouquet");
         require(m.function() == bouquet_function(k), "function is not bouquetmap");
         const int z = functigraph_z(m, e);
         const int z_base = m.graph_z().z;
         put(e, "z_base", z_base);
         put(e, "expected_z_base", k + 1);
         put(e, "upper", 4);
         verdict(e, z_base == k + 1 && z <= 4, "expected Z(G) = k+1 and Z(C(G,f)) <= 4");
       }},
      {"swap-gap",
       [](Measurements& m, AuditEntry& e) {
         const int k = m.param(0);
         require(k >= 2, "needs k >= 2");
         require_base(m, path_graph(4 * k), "path P_{4k}");
         require(m.function() == swap_function(4 * k), "function is not swap");
         const int z = functigraph_z(m, e);
         const int z_base = m.graph_z().z;
         put(e, "z_base", z_base);
         put(e, "lower", k + 1);
         verdict(e, z_base == 1 && z >= k + 1, "expected Z(G) = 1 and Z(C(G,f)) >= k+1");
       }},

      // ---- Cartesian products; params = {kind, s, t}
      {"product-formula",
       [](Measurements& m, AuditEntry& e) {
         const int kind = m.param(0);
         const int s = m.param(1);
         const int t = m.param(2);
         require(kind == 0 || kind == 1, "unknown product kind");
         require(t >= 2 && (kind == 0 ? s >= 2 : s >= 3), "product dimensions below the closed-form range");
         const Graph left = kind == 0 ? path_graph(s) : cycle_graph(s);
         require(m.graph() == cartesian_product(left, path_graph(t)), "graph is not the stated product");
         const int z = graph_z(m, e);
         const int expected = kind == 0 ? std::min(s, t) : std::min(s, 2 * t);
         put(e, "expected", expected);
         verdict(e, z == expected, equal_note(z, expected));
       }},
      {"product-upper",
       [](Measurements& m, AuditEntry& e) {
         const int kind = m.param(0);
         const int s = m.param(1);
         const int t = m.param(2);
         require(kind == 0 || kind == 1, "unknown product kind");
         const Graph left = kind == 0 ? path_graph(s) : cycle_graph(s);
         const Graph right = path_graph(t);
         require(m.graph() == cartesian_product(left, right), "graph is not the stated product");
         const int z = graph_z(m, e);
         const int zl = m.exact_z(left).z;
         const int zr = m.exact_z(right).z;
         const int bound = std::min(zl * right.order(), zr * left.order());
         put(e, "z_left", zl);
         put(e, "z_right", zr);
         put(e, "bound", bound);
         verdict(e, z <= bound, "Z of the product exceeds min{Z(G)|V(H)|, Z(H)|V(G)|}");
       }},
  };
  return checks;
}

const CheckFn& lookup(std::string_view id) {
  const auto& table = registry();
  const auto it = table.find(id);
  if (it == table.end()) throw InputError("unknown check '" + std::string(id) + "'");
  return it->second;
}

}  // namespace

std::vector<std::string_view> check_ids() {
  std::vector<std::string_view> out;
  for (const auto& [id, fn] : registry()) out.push_back(id);
  return out;
}

std::vector<AuditEntry> evaluate_checks(std::span<const std::string_view> ids, const AuditInstance& instance,
                                        const Limits& limits) {
  Measurements m(instance, limits);
  std::vector<AuditEntry> out;
  out.reserve(ids.size());
  for (auto id : ids) {
    const auto& fn = lookup(id);
    AuditEntry entry;
    entry.check_id = std::string(id);
    entry.instance = instance;
    fn(m, entry);
    out.push_back(std::move(entry));
  }
  return out;
}

AuditEntry evaluate_check(std::string_view check_id, const AuditInstance& instance, const Limits& limits) {
  const std::string_view ids[] = {check_id};
  return std::move(evaluate_checks(ids, instance, limits).front());
}

}  // namespace zf
