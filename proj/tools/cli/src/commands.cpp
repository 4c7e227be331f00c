#include "zf/cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "zf/audit.hpp"
#include "zf/cli/dot.hpp"
#include "zf/cli/graph_source.hpp"
#include "zf/cli/json_io.hpp"
#include "zf/errors.hpp"
#include "zf/forcing.hpp"
#include "zf/functigraph.hpp"
#include "zf/limits.hpp"
#include "zf/parallel.hpp"
#include "zf/path_cover.hpp"

namespace zf::cli {

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int label = 0;
    try {
      label = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad vertex label '" + item + "'");
    }
    if (used != item.size()) throw InputError("bad vertex label '" + item + "'");
    if (label < 1 || label > n) throw InputError("vertex " + item + " outside 1.." + std::to_string(n));
    s.insert(label - 1);
  }
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string one_based(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

std::string functigraph_labels(const VertexSet& s, int n) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += functigraph_label(v, n);
    first = false;
  }
  return out + "}";
}

Json label_array(const VertexSet& s, int n) {
  Json out = Json::array();
  for (int v : s) out.push_back(functigraph_label(v, n));
  return out;
}

struct Envelope {
  std::string command;
  std::vector<std::string> args;
  Clock::time_point start = Clock::now();

  Json make(Json inputs, Json results) const {
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    return Json{{"command", command},
                {"args", args},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"timing", {{"elapsed_ms", elapsed.count()}}}};
  }
};

Limits effective_limits(const std::optional<int>& max_order) {
  auto limits = Limits::from_environment();
  if (max_order) limits.max_exact_order = *max_order;
  return limits;
}

struct ComputeArgs {
  std::string source;
  bool path_cover = false;
  bool prop_time = false;
  bool json = false;
  std::optional<int> max_order;
};

int compute(const ComputeArgs& a, const Envelope& env, std::ostream& out) {
  const auto limits = effective_limits(a.max_order);
  const Graph g = load_graph_source(a.source);
  enforce_cap(g.order(), limits.max_exact_order, "exact zero forcing search");
  const auto r = zero_forcing_number(g);
  std::optional<PathCoverResult> cover;
  if (a.path_cover) cover = path_cover_number(g, limits.max_path_cover_order);
  std::optional<int> time;
  if (a.prop_time) time = propagation_time(g, r.witness);

  if (a.json) {
    Json results{{"z", r.z},
                 {"witness", set_to_json(r.witness, true)},
                 {"chronicle", chronicle_to_json(r.chronicle)},
                 {"search", {{"subsets_tested", r.stats.subsets_tested}, {"pruned", r.stats.pruned}}}};
    if (cover) {
      Json paths = Json::array();
      for (const auto& path : cover->cover) {
        Json row = Json::array();
        for (int v : path) row.push_back(v + 1);
        paths.push_back(std::move(row));
      }
      results["path_cover"] = {{"p", cover->p}, {"cover", std::move(paths)}};
    }
    if (time) results["propagation_time"] = *time;
    Json inputs{{"graph_source", a.source}, {"graph", graph_to_json(g)}};
    out << env.make(std::move(inputs), std::move(results)).dump(2) << '\n';
    return exit_ok;
  }

  out << "graph: " << g.name() << " (n=" << g.order() << ", m=" << g.size() << ")\n";
  out << "Z = " << r.z << '\n';
  out << "witness: " << one_based(r.witness) << '\n';
  out << "subsets tested: " << r.stats.subsets_tested << " (pruned " << r.stats.pruned << ")\n";
  if (cover) {
    out << "P = " << cover->p << '\n';
    for (const auto& path : cover->cover) {
      out << "  path:";
      for (std::size_t i = 0; i < path.size(); ++i) out << (i ? "-" : " ") << path[i] + 1;
      out << '\n';
    }
  }
  if (time) out << "propagation time = " << *time << '\n';
  return exit_ok;
}

struct VerifyArgs {
  std::string source;
  std::string set;
  bool json = false;
};

int verify(const VerifyArgs& a, const Envelope& env, std::ostream& out) {
  const Graph g = load_graph_source(a.source);
  const VertexSet s = parse_vertex_list(a.set, g.order());
  const auto r = closure(g, s);
  const bool forcing = r.black.size() == g.order();

  if (a.json) {
    Json results{{"forcing", forcing},
                 {"rounds", r.chronicle.rounds()},
                 {"black", set_to_json(r.black, true)},
                 {"chronicle", chronicle_to_json(r.chronicle)}};
    Json inputs{{"graph_source", a.source}, {"graph", graph_to_json(g)}, {"set", set_to_json(s, true)}};
    out << env.make(std::move(inputs), std::move(results)).dump(2) << '\n';
    return exit_ok;
  }

  out << "forcing: " << (forcing ? "true" : "false") << '\n';
  out << "rounds: " << r.chronicle.rounds() << '\n';
  int round = 0;
  for (const auto& e : r.chronicle.events) {
    if (e.round != round) {
      if (round) out << '\n';
      round = e.round;
      out << "round " << round << ":";
    } else {
      out << ',';
    }
    out << ' ' << e.forcer + 1 << " -> " << e.forced + 1;
  }
  if (round) out << '\n';
  if (!forcing) out << "stalled after round " << r.chronicle.rounds() << "; black: " << one_based(r.black) << '\n';
  return exit_ok;
}

struct FunctigraphArgs {
  std::string source;
  std::string function;
  bool dot = false;
  bool z = false;
  bool json = false;
  std::optional<int> max_order;
};

int functigraph(const FunctigraphArgs& a, const Envelope& env, std::ostream& out) {
  if (a.dot && a.json) throw InputError("--dot and --json are mutually exclusive");
  const auto limits = effective_limits(a.max_order);
  const Graph base = load_graph_source(a.source);
  const auto f = parse_function_spec(a.function, base);
  const auto fg = build_functigraph(base, f);
  const int n = base.order();
  std::optional<ZResult> r;
  if (a.z) {
    enforce_cap(fg.whole.order(), limits.max_exact_order, "exact zero forcing search");
    r = zero_forcing_number(fg.whole, 1 + min_degree(base));
  }

  if (a.dot) {
    write_functigraph_dot(out, fg, r ? std::optional<VertexSet>(r->witness) : std::nullopt);
    return exit_ok;
  }
  if (a.json) {
    Json results{{"name", fg.whole.name()},
                 {"range_size", f.range_size()},
                 {"permutation", f.is_permutation()},
                 {"graph", graph_to_json(fg.whole)}};
    if (r) {
      results["z"] = r->z;
      results["witness"] = label_array(r->witness, n);
    }
    Json inputs{{"graph_source", a.source},
                {"graph", graph_to_json(base)},
                {"function_source", a.function},
                {"function", function_to_json(f)}};
    out << env.make(std::move(inputs), std::move(results)).dump(2) << '\n';
    return exit_ok;
  }

  out << fg.whole.name() << ": order " << fg.whole.order() << ", " << fg.whole.size() << " edges, range size "
      << f.range_size() << (f.is_permutation() ? " (permutation)" : "") << '\n';
  if (r) {
    out << "Z = " << r->z << '\n';
    out << "witness: " << functigraph_labels(r->witness, n) << '\n';
  }
  return exit_ok;
}

struct SweepArgs {
  std::string source;
  bool all = false;
  bool perm = false;
  std::optional<int> range;
  int jobs = 1;
  bool json = false;
  std::optional<int> max_order;
};

int sweep(const SweepArgs& a, const Envelope& env, std::ostream& out) {
  const auto limits = effective_limits(a.max_order);
  const Graph base = load_graph_source(a.source);
  const int n = base.order();
  FunctionFilter filter = FunctionFilter::everything();
  std::string filter_name = "all";
  if (a.perm) {
    filter = FunctionFilter::permutations_only();
    filter_name = "perm";
  } else if (a.range) {
    if (*a.range < 1 || *a.range > n) throw InputError("--range must lie in 1.." + std::to_string(n));
    filter = FunctionFilter::with_range(*a.range);
    filter_name = "range=" + std::to_string(*a.range);
  }
  enforce_cap(2 * n, limits.max_exact_order, "exact zero forcing search");
  const auto functions = enumerate_functions(n, filter, {limits.max_all_functions, limits.max_permutations});
  const int lower = n > 0 ? 1 + min_degree(base) : 0;
  const auto zs = parallel_map(functions.size(), a.jobs, [&](std::size_t i) {
    return zero_forcing_number(build_functigraph(base, functions[i]).whole, lower).z;
  });

  std::map<int, int> counts;
  for (int z : zs) ++counts[z];
  const int min_z = counts.empty() ? 0 : counts.begin()->first;
  const int max_z = counts.empty() ? 0 : counts.rbegin()->first;

  if (a.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < functions.size(); ++i)
      rows.push_back({{"function", function_to_json(functions[i])}, {"s", functions[i].range_size()}, {"z", zs[i]}});
    Json z_counts = Json::object();
    for (const auto& [z, c] : counts) z_counts[std::to_string(z)] = c;
    Json results{{"filter", filter_name},
                 {"rows", std::move(rows)},
                 {"summary", {{"count", functions.size()}, {"min_z", min_z}, {"max_z", max_z}, {"z_counts", std::move(z_counts)}}}};
    Json inputs{{"graph_source", a.source}, {"graph", graph_to_json(base)}};
    out << env.make(std::move(inputs), std::move(results)).dump(2) << '\n';
    return exit_ok;
  }

  const std::size_t width = std::max<std::size_t>(2 * static_cast<std::size_t>(n), 8);
  out << std::left << std::setw(static_cast<int>(width)) << "f" << "  s   Z\n";
  for (std::size_t i = 0; i < functions.size(); ++i)
    out << std::left << std::setw(static_cast<int>(width)) << format_images(functions[i]) << "  " << std::setw(3)
        << functions[i].range_size() << ' ' << zs[i] << '\n';
  out << "summary: " << functions.size() << " functions (" << filter_name << "), min Z = " << min_z
      << ", max Z = " << max_z << '\n';
  for (const auto& [z, c] : counts) out << "  Z = " << z << ": " << c << '\n';
  return exit_ok;
}

void print_report(std::ostream& out, const AuditReport& report, bool verbose) {
  out << "suite " << report.suite << " (seed " << report.seed << ")\n";
  for (const auto& c : report.coverage)
    out << "  coverage " << c.label << ": " << c.enumerated << '/' << c.expected
        << (c.enumerated == c.expected ? "" : "  MISMATCH") << '\n';
  for (const auto& e : report.entries) {
    if (!verbose && e.status == Status::pass) continue;
    out << "  " << std::left << std::setw(12) << to_string(e.status) << std::setw(28) << e.check_id << e.instance.key;
    for (const auto& d : e.details) out << ' ' << d.name << '=' << d.value;
    if (!e.note.empty()) out << "  " << e.note;
    out << '\n';
  }
  out << "pass " << report.count(Status::pass) << ", fail " << report.count(Status::fail) << ", observation "
      << report.count(Status::observation) << ": " << (report.passed() ? "PASSED" : "FAILED") << '\n';
}

struct AuditArgs {
  std::string suite;
  std::optional<int> n;
  std::uint64_t seed = 1;
  std::optional<int> samples;
  int jobs = 1;
  std::string json_path;
  bool verbose = false;
  std::optional<int> max_order;
};

int audit(const AuditArgs& a, const Envelope& env, std::ostream& out) {
  SuiteOptions options;
  options.n = a.n;
  options.seed = a.seed;
  options.samples = a.samples;
  options.jobs = a.jobs;
  options.limits = effective_limits(a.max_order);
  const auto report = run_suite(a.suite, options);

  if (!a.json_path.empty()) {
    Json inputs{{"suite", a.suite}, {"seed", a.seed}, {"jobs", a.jobs}};
    if (a.n) inputs["n"] = *a.n;
    if (a.samples) inputs["samples"] = *a.samples;
    const auto text = env.make(std::move(inputs), report_to_json(report)).dump(2);
    if (a.json_path == "-") {
      out << text << '\n';
    } else {
      std::ofstream file(a.json_path);
      if (!file) throw InputError("cannot write " + a.json_path);
      file << text << '\n';
    }
  }
  if (a.json_path != "-") print_report(out, report, a.verbose);
  return report.passed() ? exit_ok : exit_audit_failure;
}

struct ReplayArgs {
  std::string path;
  std::optional<int> max_order;
};

int replay(const ReplayArgs& a, std::ostream& out) {
  std::ifstream file(a.path);
  if (!file) throw InputError("cannot open " + a.path);
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::exception& ex) {
    throw InputError(std::string("invalid JSON: ") + ex.what());
  }
  const Json& report = doc.contains("results") ? doc.at("results") : doc;
  if (!report.contains("entries")) throw InputError("no report entries in " + a.path);
  const auto limits = effective_limits(a.max_order);
  int replayed = 0;
  int differing = 0;
  for (const auto& item : report.at("entries")) {
    if (!item.contains("graph")) continue;
    const auto recorded = entry_from_json(item);
    const auto again = evaluate_check(recorded.check_id, recorded.instance, limits);
    const bool same = again.status == recorded.status && again.details == recorded.details;
    ++replayed;
    if (!same) ++differing;
    out << (same ? "reproduced " : "DIFFERS    ") << recorded.check_id << ' ' << recorded.instance.key << ": "
        << to_string(again.status) << '\n';
  }
  out << replayed << " entries replayed, " << differing << " differ\n";
  return differing == 0 ? exit_ok : exit_audit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact zero forcing numbers, functigraphs and bound audits", "zf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  ComputeArgs compute_args;
  auto* compute_cmd = app.add_subcommand("compute", "Zero forcing number and a minimum witness");
  compute_cmd->add_option("graph", compute_args.source, "Family spec, edge-list file, or - for stdin")->required();
  compute_cmd->add_flag("--path-cover", compute_args.path_cover, "Also compute the path cover number");
  compute_cmd->add_flag("--prop-time", compute_args.prop_time, "Propagation time of the witness");
  compute_cmd->add_flag("--json", compute_args.json, "JSON envelope on stdout");
  compute_cmd->add_option("--max-order", compute_args.max_order, "Cap for the exact search");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a set is zero forcing");
  verify_cmd->add_option("graph", verify_args.source, "Family spec, edge-list file, or - for stdin")->required();
  verify_cmd->add_option("set", verify_args.set, "Comma-separated 1-based vertices")->required();
  verify_cmd->add_flag("--json", verify_args.json, "JSON envelope on stdout");

  FunctigraphArgs fg_args;
  auto* fg_cmd = app.add_subcommand("functigraph", "Build C(G,f)");
  fg_cmd->add_option("graph", fg_args.source, "Base graph")->required();
  fg_cmd->add_option("function", fg_args.function,
                     "id | const:j | list:.. | perm:.. | mod:k | swap | bouquetmap")
      ->required();
  fg_cmd->add_flag("--dot", fg_args.dot, "Emit Graphviz DOT");
  fg_cmd->add_flag("--z", fg_args.z, "Compute Z(C(G,f))");
  fg_cmd->add_flag("--json", fg_args.json, "JSON envelope on stdout");
  fg_cmd->add_option("--max-order", fg_args.max_order, "Cap for the exact search");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Z(C(G,f)) for every function in a class");
  sweep_cmd->add_option("graph", sweep_args.source, "Base graph")->required();
  auto* all_flag = sweep_cmd->add_flag("--all", sweep_args.all, "Every function (default)");
  auto* perm_flag = sweep_cmd->add_flag("--perm", sweep_args.perm, "Permutations only");
  auto* range_opt = sweep_cmd->add_option("--range", sweep_args.range, "Functions with range size s");
  all_flag->excludes(perm_flag)->excludes(range_opt);
  perm_flag->excludes(range_opt);
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--json", sweep_args.json, "JSON envelope on stdout");
  sweep_cmd->add_option("--max-order", sweep_args.max_order, "Cap for the exact search");

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "Run an audit suite");
  std::vector<std::string> suites;
  for (auto name : suite_names()) suites.emplace_back(name);
  audit_cmd->add_option("suite", audit_args.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  audit_cmd->add_option("--n", audit_args.n, "Restrict family suites to one order")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--seed", audit_args.seed, "Seed for sampled instances");
  audit_cmd->add_option("--sample", audit_args.samples, "Sample count")->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--jobs", audit_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--json", audit_args.json_path, "Write the JSON report to this path (- for stdout)");
  audit_cmd->add_flag("--verbose", audit_args.verbose, "List passing entries too");
  audit_cmd->add_option("--max-order", audit_args.max_order, "Cap for the exact search");

  ReplayArgs replay_args;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run the non-passing entries of a JSON report");
  replay_cmd->add_option("report", replay_args.path, "Report written by audit --json")->required();
  replay_cmd->add_option("--max-order", replay_args.max_order, "Cap for the exact search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  Envelope env;
  env.args = args;
  try {
    if (compute_cmd->parsed()) {
      env.command = "compute";
      return compute(compute_args, env, out);
    }
    if (verify_cmd->parsed()) {
      env.command = "verify";
      return verify(verify_args, env, out);
    }
    if (fg_cmd->parsed()) {
      env.command = "functigraph";
      return functigraph(fg_args, env, out);
    }
    if (sweep_cmd->parsed()) {
      env.command = "sweep";
      return sweep(sweep_args, env, out);
    }
    if (audit_cmd->parsed()) {
      env.command = "audit";
      return audit(audit_args, env, out);
    }
    if (replay_cmd->parsed()) return replay(replay_args, out);
  } catch (const CapExceeded& e) {
    err << "zf: " << e.what() << '\n';
    return exit_cap_exceeded;
  } catch (const InputError& e) {
    err << "zf: " << e.what() << '\n';
    return exit_input_error;
  } catch (const PreconditionError& e) {
    err << "zf: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace zf::cli
