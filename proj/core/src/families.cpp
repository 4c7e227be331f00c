#include "zf/families.hpp"

#include <charconv>

#include "zf/errors.hpp"

namespace zf {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("expected an integer in '" + std::string(context) + "'");
  return value;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.set_name("P_" + std::to_string(n));
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  g.set_name("C_" + std::to_string(n));
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  g.set_name("K_" + std::to_string(n));
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  g.set_name("petersen");
  return g;
}

Graph bouquet_graph(int k) {
  require(k >= 1, "bouquet needs k >= 1");
  Graph g(2 * k + 1);
  for (int t = 1; t <= k; ++t) {
    g.add_edge(0, 2 * t - 1);
    g.add_edge(0, 2 * t);
    g.add_edge(2 * t - 1, 2 * t);
  }
  g.set_name("bouquet_" + std::to_string(k));
  return g;
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  g.set_name("K_1," + std::to_string(leaves));
  return g;
}

Graph family(const FamilySpec& spec) {
  switch (spec.kind) {
    case Family::path: return path_graph(spec.parameter);
    case Family::cycle: return cycle_graph(spec.parameter);
    case Family::complete: return complete_graph(spec.parameter);
    case Family::petersen: return petersen_graph();
    case Family::bouquet: return bouquet_graph(spec.parameter);
    case Family::star: return star_graph(spec.parameter);
  }
  throw InputError("unknown family");
}

FamilySpec parse_family_spec(std::string_view text) {
  if (text == "petersen") return {Family::petersen, 10};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("unrecognised graph spec '" + std::string(text) + "'");
  const auto head = text.substr(0, colon);
  const int value = parse_int(text.substr(colon + 1), text);
  FamilySpec spec;
  if (head == "P") spec = {Family::path, value};
  else if (head == "C") spec = {Family::cycle, value};
  else if (head == "K") spec = {Family::complete, value};
  else if (head == "bouquet") spec = {Family::bouquet, value};
  else if (head == "star") spec = {Family::star, value};
  else throw InputError("unknown graph family '" + std::string(head) + "'");
  // Validate the parameter eagerly so bad specs fail at parse time.
  (void)family(spec);
  return spec;
}

bool is_family_spec(std::string_view text) {
  if (text == "petersen") return true;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return false;
  const auto head = text.substr(0, colon);
  return head == "P" || head == "C" || head == "K" || head == "bouquet" || head == "star";
}

std::string to_string(const FamilySpec& spec) {
  const auto p = std::to_string(spec.parameter);
  switch (spec.kind) {
    case Family::path: return "P:" + p;
    case Family::cycle: return "C:" + p;
    case Family::complete: return "K:" + p;
    case Family::petersen: return "petersen";
    case Family::bouquet: return "bouquet:" + p;
    case Family::star: return "star:" + p;
  }
  return "?";
}

}  // namespace zf
