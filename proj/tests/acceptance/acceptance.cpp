// Acceptance run: one PASS/FAIL line per criterion, each with its own time
// limit. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zf/audit.hpp"
#include "zf/cli/commands.hpp"
#include "zf/cli/json_io.hpp"
#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/functigraph.hpp"
#include "zf/path_cover.hpp"
#include "zf/random_graphs.hpp"

using namespace zf;

namespace {

constexpr std::uint64_t kSeed = 1;

// Collects failed expectations; a criterion passes when none were recorded.
struct Probe {
  std::vector<std::string> problems;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 20) problems.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Probe&)> body;
};

int z_of(const Graph& g) { return zero_forcing_number(g).z; }

int fz(const Graph& g, const VertexFunction& f) { return z_of(build_functigraph(g, f).whole); }

std::string str(long long x) { return std::to_string(x); }

long long detail(const AuditEntry& e, std::string_view name) { return e.detail(name).value_or(-1); }

void expect_report(Probe& p, const AuditReport& r, const std::string& label) {
  p.expect(r.count(Status::fail) == 0, label + ": " + str(r.count(Status::fail)) + " failing entries");
  for (const auto& c : r.coverage)
    p.expect(c.enumerated == c.expected, label + ": coverage " + c.label + " " + str(static_cast<long long>(c.enumerated)) +
                                             "/" + str(static_cast<long long>(c.expected)));
}

int count_check(const AuditReport& r, std::string_view id) {
  return static_cast<int>(std::count_if(r.entries.begin(), r.entries.end(), [&](const auto& e) { return e.check_id == id; }));
}

// Path / complete recognised from the edge count and degrees alone.
bool looks_like_path(const Graph& g) {
  if (!is_connected(g) || g.size() != g.order() - 1) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool looks_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

void basic_characterizations(Probe& p) {
  for (int n = 2; n <= 8; ++n) {
    p.expect(z_of(path_graph(n)) == 1, "Z(P_" + str(n) + ") != 1");
    p.expect(z_of(complete_graph(n)) == n - 1, "Z(K_" + str(n) + ") != n-1");
  }
  int ones = 0, tops = 0;
  const auto library = random_connected_library(50, 2, 9, kSeed);
  for (const auto& g : library) {
    const int z = z_of(g);
    ones += z == 1;
    tops += z == g.order() - 1;
    p.expect((z == 1) == looks_like_path(g), g.name() + ": Z=1 mismatch");
    p.expect((z == g.order() - 1) == looks_complete(g), g.name() + ": Z=n-1 mismatch");
  }
  p.summary = "50 random graphs, " + str(ones) + " with Z=1, " + str(tops) + " with Z=n-1";
}

void petersen(Probe& p) {
  const int zp = z_of(petersen_graph());
  const int zs = fz(cycle_graph(5), pentagram_permutation());
  p.expect(zp == 5, "Z(petersen) = " + str(zp));
  p.expect(zs == 5, "Z(C(C_5, pentagram)) = " + str(zs));
  p.summary = "Z(petersen)=" + str(zp) + ", Z(C(C_5,sigma))=" + str(zs);
}

void complete_formula(Probe& p) {
  std::string counts;
  for (int n = 3; n <= 5; ++n) {
    const auto r = audit_complete_family(n);
    expect_report(p, r, "K_" + str(n));
    int checked = 0;
    for (const auto& e : r.entries) {
      if (e.check_id != "complete-formula") continue;
      ++checked;
      const int s = e.instance.function->range_size();
      const int expected = s == n ? n : s == 1 ? 2 * n - 2 : 2 * n - s - 1;
      p.expect(detail(e, "z") == expected, e.instance.key + ": z=" + str(detail(e, "z")));
    }
    long long all = 1;
    for (int i = 0; i < n; ++i) all *= n;
    p.expect(checked == all, "K_" + str(n) + ": " + str(checked) + " functions checked");
    counts += (counts.empty() ? "" : " + ") + str(checked);
  }
  p.summary = counts + " functions";
}

void cycle_identities(Probe& p) {
  p.expect(fz(cycle_graph(3), VertexFunction::identity(3)) == 3, "Z(C(C_3,id)) != 3");
  for (int n = 4; n <= 8; ++n) p.expect(fz(cycle_graph(n), VertexFunction::identity(n)) == 4, "Z(C(C_" + str(n) + ",id)) != 4");
  int constants = 0;
  for (int n = 3; n <= 8; ++n)
    for (int t = 0; t < n; ++t) {
      ++constants;
      p.expect(fz(cycle_graph(n), VertexFunction::constant(n, t)) == 4, "Z(C(C_" + str(n) + ",const " + str(t + 1) + ")) != 4");
    }
  p.summary = "6 identities, " + str(constants) + " constants";
}

void cycle_bounds(Probe& p) {
  int range_checks = 0;
  for (int n = 3; n <= 8; ++n) {
    const auto mode = n <= 5 ? Sampling::all() : Sampling::sampled(200, derive_seed(kSeed, static_cast<std::uint64_t>(n)));
    const auto r = audit_cycle_family(n, mode);
    expect_report(p, r, "C_" + str(n));
    for (const auto& e : r.entries) {
      if (e.check_id != "cycle-range") continue;
      ++range_checks;
      const long long s = e.instance.function->range_size();
      p.expect(3 <= detail(e, "z") && detail(e, "z") <= s + 2, e.instance.key + ": z out of [3, s+2]");
    }
    if (n >= 6) p.expect(count_check(r, "cycle-range") >= 200, "C_" + str(n) + ": fewer than 200 samples");
  }
  const auto mod = named_construction("cycle-mod", 3);
  const int zm = z_of(mod.whole);
  p.expect(zm == 5, "cycle-mod k=3 gives " + str(zm));
  for (int n = 3; n <= 8; ++n) {
    const int zl = z_of(named_construction("cycle-low", n).whole);
    p.expect(zl == 3, "cycle lower-bound construction on C_" + str(n) + " gives " + str(zl));
  }
  p.summary = str(range_checks) + " functions with 1<s<n, cycle-mod k=3 -> " + str(zm);
}

void path_bounds(Probe& p) {
  for (int n = 3; n <= 8; ++n) {
    p.expect(fz(path_graph(n), VertexFunction::identity(n)) == 2, "Z(C(P_" + str(n) + ",id)) != 2");
    for (int t = 0; t < n; ++t)
      p.expect(fz(path_graph(n), VertexFunction::constant(n, t)) == 2, "Z(C(P_" + str(n) + ",const)) != 2");
  }
  int checked = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : enumerate_functions(n, FunctionFilter::everything())) {
      const int s = f.range_size();
      if (s == 1 || s == n) continue;
      ++checked;
      const int z = fz(path_graph(n), f);
      p.expect(2 <= z && z <= s + 1, "C(P_" + str(n) + "; " + format_images(f) + "): z=" + str(z));
    }
  const int zm = z_of(named_construction("path-mod", 3).whole);
  p.expect(zm == 4, "path-mod k=3 gives " + str(zm));
  p.summary = str(checked) + " functions with 1<s<n, path-mod k=3 -> " + str(zm);
}

void permutation_sweeps(Probe& p) {
  int total = 0;
  std::vector<std::string> p4_top;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& sigma : enumerate_functions(n, FunctionFilter::permutations_only())) {
      total += 2;
      const int zc = fz(cycle_graph(n), sigma);
      p.expect(3 <= zc && zc <= n, "C_" + str(n) + " " + format_images(sigma) + ": z=" + str(zc));
      p.expect((zc == 3) == (n == 3), "C_" + str(n) + " " + format_images(sigma) + ": z=3 outside n=3");
      const int zp = fz(path_graph(n), sigma);
      p.expect(2 <= zp && zp <= n, "P_" + str(n) + " " + format_images(sigma) + ": z=" + str(zp));
      if (n == 4 && zp == 4) p4_top.push_back(format_images(sigma));
    }
  }
  // (3,4,1,2) and its image under reversing the path, (2,1,4,3).
  std::sort(p4_top.begin(), p4_top.end());
  p.expect(p4_top == std::vector<std::string>{"2,1,4,3", "3,4,1,2"}, "Z(C(P_4,sigma))=4 set differs");
  std::string listed;
  for (const auto& s : p4_top) listed += (listed.empty() ? "" : " ") + s;
  p.summary = str(total) + " permutation functigraphs; P_4 maximum at " + listed;
}

void product_tables(Probe& p) {
  int cells = 0;
  for (int s = 2; s <= 4; ++s)
    for (int t = 2; t <= 4; ++t) {
      const auto r = audit_product(ProductKind::path_path, s, t);
      expect_report(p, r, "P_" + str(s) + "xP_" + str(t));
      const int z = z_of(cartesian_product(path_graph(s), path_graph(t)));
      p.expect(z == std::min(s, t), "Z(P_" + str(s) + "xP_" + str(t) + ")=" + str(z));
      ++cells;
    }
  for (int s = 3; s <= 6; ++s)
    for (int t = 2; t <= 3; ++t) {
      if (s * t > 18) continue;
      const auto r = audit_product(ProductKind::cycle_path, s, t);
      expect_report(p, r, "C_" + str(s) + "xP_" + str(t));
      const int z = z_of(cartesian_product(cycle_graph(s), path_graph(t)));
      p.expect(z == std::min(s, 2 * t), "Z(C_" + str(s) + "xP_" + str(t) + ")=" + str(z));
      ++cells;
    }
  p.summary = str(cells) + " products";
}

void structural_bounds(Probe& p) {
  int cut_checks = 0;
  int deletion_checks = 0;
  const auto graphs = random_connected_library(100, 2, 9, kSeed);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const auto z = zero_forcing_number(g).z;
    p.expect(min_degree(g) <= z, g.name() + ": delta > Z");
    p.expect(path_cover_number(g).p <= z, g.name() + ": P > Z");
    for (int v : cut_vertices(g)) {
      ++cut_checks;
      p.expect(audit_cut_vertex(g, v).status == Status::pass, g.name() + ": cut-vertex bound at " + str(v));
    }
    const auto r = audit_deletion(g, 3, derive_seed(kSeed, i));
    expect_report(p, r, g.name());
    deletion_checks += static_cast<int>(r.entries.size());
  }
  for (const auto& t : random_tree_library(50, 2, 9, kSeed))
    p.expect(path_cover_number(t).p == z_of(t), t.name() + ": P != Z");
  for (const auto& u : random_unicyclic_library(30, 3, 9, kSeed))
    p.expect(path_cover_number(u).p == z_of(u), u.name() + ": P != Z");
  p.summary = "100 graphs, " + str(deletion_checks) + " deletions, " + str(cut_checks) + " cut vertices, 50 trees, 30 unicyclic";
}

void gap_constructions(Probe& p) {
  const auto bouquet = named_construction("bouquet", 3);
  const int zb = z_of(bouquet.base);
  const int zbc = z_of(bouquet.whole);
  p.expect(zb == 4, "Z(bouquet base)=" + str(zb));
  p.expect(zbc <= 4, "Z(C(bouquet))=" + str(zbc));
  const auto swap = named_construction("path-swap", 2);
  const int zs = z_of(swap.base);
  const int zsc = z_of(swap.whole);
  p.expect(zs == 1, "Z(P_8)=" + str(zs));
  p.expect(zsc >= 3, "Z(C(P_8,swap))=" + str(zsc));
  p.summary = "bouquet: Z(G)=" + str(zb) + ", Z(C)=" + str(zbc) + "; swap: Z(G)=" + str(zs) + ", Z(C)=" + str(zsc);
}

void general_bounds(Probe& p) {
  SuiteOptions options;
  options.seed = kSeed;
  const auto r = run_suite("functigraph", options);
  expect_report(p, r, "functigraph suite");
  int random_pairs = 0;
  for (const auto& e : r.entries) {
    if (e.check_id != "functigraph-bounds") continue;
    if (e.instance.key.find("connected#") != std::string::npos) ++random_pairs;
    const int n = e.instance.graph.order();
    p.expect(1 + min_degree(e.instance.graph) <= detail(e, "z") && detail(e, "z") <= 2 * n - 2, e.instance.key);
  }
  p.expect(random_pairs == 500, str(random_pairs) + " random pairs");
  // Both ends are reached on complete graphs.
  bool low = false, high = false;
  for (int n = 3; n <= 5; ++n) {
    low = low || fz(complete_graph(n), VertexFunction::identity(n)) == 1 + (n - 1);
    high = high || fz(complete_graph(n), VertexFunction::constant(n, 0)) == 2 * n - 2;
  }
  p.expect(low && high, "K_n does not reach both ends");
  p.summary = str(random_pairs) + " random pairs, both ends reached on K_n";
}

void conjecture_monitor(Probe& p) {
  SuiteOptions options;
  options.seed = kSeed;
  const auto r = run_suite("conjecture", options);
  expect_report(p, r, "conjecture suite");
  int observed = 0, negative = 0, upper = 0;
  for (const auto& e : r.entries) {
    if (e.check_id == "identity-conjecture") {
      ++observed;
      p.expect(e.status == Status::observation, "conjecture entry not an observation");
      negative += detail(e, "margin") < 0;
    }
    if (e.check_id == "identity-upper") {
      ++upper;
      p.expect(e.status == Status::pass, e.instance.key + ": identity upper bound");
    }
  }
  std::ostringstream out, err;
  const int code = cli::run({"audit", "conjecture", "--seed", str(kSeed)}, out, err);
  p.expect(code == 0, "audit conjecture exit code " + str(code));
  p.summary = str(observed) + " observations (" + str(negative) + " with negative margin), " + str(upper) + " upper-bound checks";
}

void determinism(Probe& p) {
  int compared = 0;
  for (auto suite : suite_names()) {
    if (suite == "all") continue;
    std::string reports[2];
    for (int k = 0; k < 2; ++k) {
      std::ostringstream out, err;
      const std::string jobs = k == 0 ? "1" : "4";
      const int code = cli::run({"audit", std::string(suite), "--seed", "7", "--jobs", jobs, "--json", "-"}, out, err);
      p.expect(code == 0, std::string(suite) + ": exit " + str(code));
      auto doc = cli::Json::parse(out.str());
      // The report itself, without the timing and the echoed invocation.
      reports[k] = doc.at("results").dump(2);
    }
    p.expect(reports[0] == reports[1], std::string(suite) + ": reports differ between --jobs 1 and --jobs 4");
    ++compared;
  }
  p.summary = str(compared) + " suites byte-identical across --jobs 1/4";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "basic characterizations", 10, basic_characterizations},
      {2, "Petersen", 5, petersen},
      {3, "complete-graph formula, exhaustive", 300, complete_formula},
      {4, "cycle identities", 30, cycle_identities},
      {5, "cycle function bound and sharpness", 300, cycle_bounds},
      {6, "path identities and bounds", 180, path_bounds},
      {7, "permutation sweeps", 120, permutation_sweeps},
      {8, "Cartesian product tables", 600, product_tables},
      {9, "structural bounds", 600, structural_bounds},
      {10, "gap constructions", 60, gap_constructions},
      {11, "general functigraph bounds", 600, general_bounds},
      {12, "conjecture monitor", 600, conjecture_monitor},
      {13, "determinism", 1800, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Probe probe;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(probe);
    } catch (const std::exception& e) {
      probe.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) probe.problems.push_back("took " + std::to_string(seconds) + " s");
    const bool ok = probe.problems.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << c.limit_seconds
              << " s)  " << probe.summary << '\n';
    for (const auto& problem : probe.problems) std::cout << "      " << problem << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
