#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// Largest base order; the functigraph has twice as many vertices.
inline constexpr int kMaxBaseOrder = kMaxOrder / 2;

// Total map from copy-1 indices to copy-2 indices: u_{i+1} -> v_{images[i]+1}.
class VertexFunction {
 public:
  VertexFunction() = default;
  // Throws InputError when an image is outside [0, images.size()).
  explicit VertexFunction(std::vector<int> images);

  static VertexFunction identity(int n);
  static VertexFunction constant(int n, int target);

  int order() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  int range_size() const { return range_size_; }
  bool is_permutation() const { return range_size_ == order(); }
  bool is_identity() const;
  bool is_constant() const { return order() > 0 && range_size_ == 1; }

  friend bool operator==(const VertexFunction& a, const VertexFunction& b) { return a.images_ == b.images_; }
  friend auto operator<=>(const VertexFunction& a, const VertexFunction& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
  int range_size_ = 0;
};

inline int range_size(const VertexFunction& f) { return f.range_size(); }

// "2,4,1,3,5": 1-based images.
std::string format_images(const VertexFunction& f);

struct FunctigraphInstance {
  Graph base;
  VertexFunction func;
  // Order 2n; u_i -> i-1, v_i -> n+i-1.
  Graph whole;
};

// Throws InputError when f.order() != g.order() or the base is too large.
FunctigraphInstance build_functigraph(const Graph& g, const VertexFunction& f);

// Grammar (images 1-based):
//   id | const:<j> | list:<i1,...,in> | perm:<i1,...,in> | mod:<k> (n = k^2,
//   f(u_{ak+i}) = v_i) | swap (even n, f(u_{2i-1}) = v_{2i}, f(u_{2i}) = v_{2i-1})
//   | bouquetmap (n = 2k+1 >= 5, bouquet labelling)
VertexFunction parse_function_spec(std::string_view spec, int n);
// As above; additionally rejects `bouquetmap` unless `base` is the
// canonically labelled bouquet of its order.
VertexFunction parse_function_spec(std::string_view spec, const Graph& base);

VertexFunction mod_function(int k);
VertexFunction swap_function(int n);
VertexFunction bouquet_function(int k);
// sigma(u_i) = v_{(2i-1 mod 5)+1} on C_5; C(C_5, sigma) is the Petersen graph.
VertexFunction pentagram_permutation();

struct FunctionFilter {
  enum class Kind { all, permutations, range_size };
  Kind kind = Kind::all;
  int range = 0;

  static FunctionFilter everything() { return {}; }
  static FunctionFilter permutations_only() { return {Kind::permutations, 0}; }
  static FunctionFilter with_range(int s) { return {Kind::range_size, s}; }
};

struct EnumerationCaps {
  int max_all = 6;
  int max_permutations = 8;
};

// Number of functions on n points that pass the filter (n^n, n!, or
// C(n,s) * surjections(n, s)).
std::uint64_t function_count(int n, const FunctionFilter& filter);

// Lexicographic stream over image vectors.
class FunctionStream {
 public:
  // Throws CapExceeded past the caps (permutations use max_permutations,
  // everything else max_all).
  FunctionStream(int n, FunctionFilter filter, EnumerationCaps caps = {});

  std::optional<VertexFunction> next();
  std::uint64_t total() const { return total_; }

 private:
  bool advance();
  bool accepted() const;

  int n_;
  FunctionFilter filter_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t total_ = 0;
};

std::vector<VertexFunction> enumerate_functions(int n, FunctionFilter filter, EnumerationCaps caps = {});

// Named (G, f) pairs:
//   bouquet (k >= 3): bouquet of k triangles with bouquetmap
//   path-swap (k >= 2): P_{4k} with swap
//   cycle-mod (k >= 3): C_{k^2} with mod:k
//   path-mod (k >= 3): P_{k^2} with mod:k
//   cycle-low (k = n >= 3): C_n, f(u_i) = v_1 for i < n, f(u_n) = v_2
//   path-low (k = n >= 3): P_n, f(u_i) = v_1 for i < n, f(u_n) = v_n
//   pentagram (k = 5): C_5 with pentagram_permutation()
FunctigraphInstance named_construction(std::string_view name, int k);

// "u3" / "v1" for functigraph vertex index v of a base of order n.
std::string functigraph_label(int v, int n);

}  // namespace zf
