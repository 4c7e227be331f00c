#include "zf/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "zf/errors.hpp"

namespace zf {
namespace {

bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw InputError("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) throw InputError("edge list is empty");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) fail(line_no, "expected header 'n m'");
  }
  if (n < 0 || n > kMaxOrder) fail(line_no, "order must be in [0, " + std::to_string(kMaxOrder) + "]");
  if (m < 0) fail(line_no, "negative edge count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no)) throw InputError("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra)) fail(line_no, "expected 'a b'");
    if (a < 0 || b < 0 || a >= n || b >= n) fail(line_no, "endpoint out of range");
    if (a == b) fail(line_no, "loop edge");
    g.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  if (next_data_line(in, line, line_no)) fail(line_no, "trailing data after " + std::to_string(m) + " edges");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  auto g = read_edge_list(in);
  g.set_name(path);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

}  // namespace zf
