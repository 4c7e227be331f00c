#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zf/vertex_set.hpp"

namespace zf::cli {

enum ExitCode : int { exit_ok = 0, exit_audit_failure = 1, exit_input_error = 2, exit_cap_exceeded = 3 };

// Runs the zf command line. args excludes the program name. All output goes
// to out/err, so the function can be driven from tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1,2,5" (1-based) -> {0,1,4}. Throws InputError on malformed text or a
// label outside 1..n.
VertexSet parse_vertex_list(const std::string& text, int n);

}  // namespace zf::cli
