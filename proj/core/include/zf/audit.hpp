#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zf/functigraph.hpp"
#include "zf/graph.hpp"
#include "zf/limits.hpp"

namespace zf {

enum class Status { pass, fail, observation };

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

// Everything needed to re-run a check: the (base) graph, the function when
// the check is about a functigraph, and check-specific integer parameters
// (a vertex, an edge, a construction parameter, product dimensions).
struct AuditInstance {
  std::string key;
  Graph graph;
  std::optional<VertexFunction> function;
  std::vector<int> params;
};

struct Measure {
  std::string name;
  long long value = 0;
  friend bool operator==(const Measure&, const Measure&) = default;
};

struct AuditEntry {
  std::string check_id;
  AuditInstance instance;
  Status status = Status::pass;
  std::vector<Measure> details;
  // Minimum zero forcing set behind the measured value (of the functigraph
  // for functigraph checks, of the graph otherwise).
  std::optional<VertexSet> witness;
  std::string note;

  std::optional<long long> detail(std::string_view name) const;
};

// Exhaustive enumerations record how many instances they visited next to the
// closed-form count.
struct Coverage {
  std::string label;
  std::uint64_t enumerated = 0;
  std::uint64_t expected = 0;
};

struct AuditReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<AuditEntry> entries;
  std::vector<Coverage> coverage;

  int count(Status status) const;
  // No fail entries and every coverage record matches its closed form.
  bool passed() const;
  void append(AuditReport other);
};

// Registered check ids, sorted.
std::vector<std::string_view> check_ids();

// Runs one check. Throws InputError for an unknown id and
// PreconditionError when the instance does not satisfy the check's
// hypotheses. Re-running a serialized entry reproduces its status.
AuditEntry evaluate_check(std::string_view check_id, const AuditInstance& instance, const Limits& limits = {});
// Several checks on one instance, sharing the expensive measurements.
std::vector<AuditEntry> evaluate_checks(std::span<const std::string_view> check_ids, const AuditInstance& instance,
                                        const Limits& limits = {});

struct Sampling {
  bool exhaustive = true;
  int count = 0;
  std::uint64_t seed = 0;

  static Sampling all() { return {}; }
  static Sampling sampled(int count, std::uint64_t seed) { return {false, count, seed}; }
};

// Z >= delta, P <= Z, P = Z on trees and unicyclic graphs, the Z = 1 and
// Z = n - 1 characterisations (connected, n >= 2), and Z >= floor(n/2) for
// strongly regular graphs.
AuditReport audit_graph(const Graph& g, const Limits& limits = {});

// Cut-vertex bound at v; throws PreconditionError when v is not a cut vertex.
AuditEntry audit_cut_vertex(const Graph& g, int v, const Limits& limits = {});

// 1 + delta <= Z(C(G,f)) <= 2n - 2; Z <= n for permutations; for the
// identity Z <= min{2Z(G), n} plus the conjecture Z >= Z(G) + 1 recorded as an
// observation. Requires connected g with n >= 3.
AuditReport audit_functigraph(const Graph& g, const VertexFunction& f, const Limits& limits = {});

// Every function on n points against the closed form for C(K_n, f).
AuditReport audit_complete_family(int n, const Limits& limits = {}, int jobs = 1);

AuditReport audit_cycle_family(int n, const Sampling& mode, const Limits& limits = {}, int jobs = 1);
AuditReport audit_path_family(int n, const Sampling& mode, const Limits& limits = {}, int jobs = 1);

enum class ProductKind { path_path, cycle_path };
AuditReport audit_product(ProductKind kind, int s, int t, const Limits& limits = {});

// |Z(g) - Z(g - v)| <= 1 and |Z(g) - Z(g - e)| <= 1 for up to `samples`
// distinct vertices and `samples` distinct edges chosen with `seed`.
AuditReport audit_deletion(const Graph& g, int samples, std::uint64_t seed, const Limits& limits = {});

// Bouquet of k triangles (k >= 3) and the P_{4k} swap (k >= 2).
AuditReport audit_gap_examples(int k, const Limits& limits = {});

// One of the named constructions with its sharpness/gap check.
AuditReport audit_construction(std::string_view name, int k, const Limits& limits = {});

struct SuiteOptions {
  std::optional<int> n;
  std::uint64_t seed = 1;
  std::optional<int> samples;
  int jobs = 1;
  Limits limits;
};

std::span<const std::string_view> suite_names();
// Throws InputError for an unknown suite.
AuditReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace zf
