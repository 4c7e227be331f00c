#pragma once

#include <string>
#include <string_view>

#include "zf/graph.hpp"

namespace zf {

enum class Family { path, cycle, complete, petersen, bouquet, star };

struct FamilySpec {
  Family kind = Family::path;
  // Order for path/cycle/complete, petal count for bouquet, leaf count for
  // star. Ignored for petersen.
  int parameter = 0;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph family(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// Outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ i+7 mod 5), spokes i ~ i+5.
Graph petersen_graph();
// k triangles glued at vertex 0; petal t (1 <= t <= k) is {0, 2t-1, 2t}.
Graph bouquet_graph(int k);
// K_{1,leaves} with centre 0.
Graph star_graph(int leaves);

// Grammar: P:<n> | C:<n> | K:<n> | petersen | bouquet:<k> | star:<n>
FamilySpec parse_family_spec(std::string_view text);
// True when the text looks like a family spec rather than a file path.
bool is_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

}  // namespace zf
