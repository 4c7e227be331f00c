#include "zf/functigraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "zf/errors.hpp"
#include "zf/families.hpp"
#include "zf/limits.hpp"

namespace zf {
namespace {

int count_distinct(const std::vector<int>& images) {
  std::vector<char> seen(images.size(), 0);
  int distinct = 0;
  for (int x : images)
    if (!seen[x]) {
      seen[x] = 1;
      ++distinct;
    }
  return distinct;
}

int parse_positive(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw InputError("malformed number '" + std::string(text) + "' in function spec '" + std::string(spec) + "'");
  return value;
}

std::vector<int> parse_image_list(std::string_view body, std::string_view spec, int n) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    const auto item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const int value = parse_positive(item, spec);
    if (value < 1 || value > n)
      throw InputError("image " + std::to_string(value) + " out of range 1.." + std::to_string(n) + " in '" + std::string(spec) + "'");
    images.push_back(value - 1);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(images.size()) != n)
    throw InputError("function spec '" + std::string(spec) + "' lists " + std::to_string(images.size()) + " images, expected " + std::to_string(n));
  return images;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

VertexFunction::VertexFunction(std::vector<int> images) : images_(std::move(images)) {
  const int n = order();
  for (int x : images_)
    if (x < 0 || x >= n) throw InputError("function image " + std::to_string(x) + " outside [0, " + std::to_string(n) + ")");
  range_size_ = count_distinct(images_);
}

VertexFunction VertexFunction::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return VertexFunction(std::move(images));
}

VertexFunction VertexFunction::constant(int n, int target) {
  if (target < 0 || target >= n) throw InputError("constant target out of range");
  return VertexFunction(std::vector<int>(n, target));
}

bool VertexFunction::is_identity() const {
  for (int i = 0; i < order(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string format_images(const VertexFunction& f) {
  std::string out;
  for (int i = 0; i < f.order(); ++i) {
    if (i) out += ',';
    out += std::to_string(f(i) + 1);
  }
  return out;
}

FunctigraphInstance build_functigraph(const Graph& g, const VertexFunction& f) {
  const int n = g.order();
  if (f.order() != n)
    throw InputError("function order " + std::to_string(f.order()) + " does not match graph order " + std::to_string(n));
  if (n > kMaxBaseOrder) throw CapExceeded("functigraph base order exceeds " + std::to_string(kMaxBaseOrder));
  Graph whole(2 * n);
  for (const auto& e : g.edges()) {
    whole.add_edge(e.a, e.b);
    whole.add_edge(n + e.a, n + e.b);
  }
  for (int i = 0; i < n; ++i) whole.add_edge(i, n + f(i));
  whole.set_name("C(" + (g.name().empty() ? std::string("G") : g.name()) + ", " + format_images(f) + ")");
  return {g, f, std::move(whole)};
}

VertexFunction mod_function(int k) {
  if (k < 1) throw InputError("mod:<k> needs k >= 1");
  std::vector<int> images(k * k);
  for (int i = 0; i < k * k; ++i) images[i] = i % k;
  return VertexFunction(std::move(images));
}

VertexFunction swap_function(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("swap needs an even order, got " + std::to_string(n));
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i ^ 1;
  return VertexFunction(std::move(images));
}

VertexFunction bouquet_function(int k) {
  if (k < 2) throw InputError("bouquetmap needs k >= 2");
  const int n = 2 * k + 1;
  std::vector<int> images(n);
  images[0] = 0;
  images[1] = 1;
  images[2 * k] = 2 * k;
  for (int i = 1; i <= k - 1; ++i) {
    images[2 * i] = 2 * i + 1;
    images[2 * i + 1] = 2 * i;
  }
  return VertexFunction(std::move(images));
}

VertexFunction pentagram_permutation() {
  std::vector<int> images(5);
  for (int i = 1; i <= 5; ++i) images[i - 1] = (2 * i - 1) % 5;
  return VertexFunction(std::move(images));
}

VertexFunction parse_function_spec(std::string_view spec, int n) {
  if (n < 1) throw InputError("function order must be positive");
  const auto colon = spec.find(':');
  const auto head = spec.substr(0, colon);
  const auto body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_body = colon != std::string_view::npos;

  if (head == "id" && !has_body) return VertexFunction::identity(n);
  if (head == "swap" && !has_body) return swap_function(n);
  if (head == "bouquetmap" && !has_body) {
    if (n < 5 || n % 2 == 0) throw InputError("bouquetmap needs an odd order >= 5, got " + std::to_string(n));
    return bouquet_function((n - 1) / 2);
  }
  if (head == "const" && has_body) {
    const int j = parse_positive(body, spec);
    if (j < 1 || j > n) throw InputError("constant target " + std::to_string(j) + " out of range 1.." + std::to_string(n));
    return VertexFunction::constant(n, j - 1);
  }
  if (head == "list" && has_body) return VertexFunction(parse_image_list(body, spec, n));
  if (head == "perm" && has_body) {
    VertexFunction f(parse_image_list(body, spec, n));
    if (!f.is_permutation()) throw InputError("perm spec '" + std::string(spec) + "' repeats an image");
    return f;
  }
  if (head == "mod" && has_body) {
    const int k = parse_positive(body, spec);
    if (k < 1 || k * k != n) throw InputError("mod:" + std::to_string(k) + " needs order " + std::to_string(k * k) + ", got " + std::to_string(n));
    return mod_function(k);
  }
  throw InputError("malformed function spec '" + std::string(spec) + "'");
}

VertexFunction parse_function_spec(std::string_view spec, const Graph& base) {
  auto f = parse_function_spec(spec, base.order());
  if (spec == "bouquetmap" && !(base == bouquet_graph((base.order() - 1) / 2)))
    throw InputError("bouquetmap requires the canonically labelled bouquet as base graph");
  return f;
}

std::uint64_t function_count(int n, const FunctionFilter& filter) {
  switch (filter.kind) {
    case FunctionFilter::Kind::all: return power(n, n);
    case FunctionFilter::Kind::permutations: {
      std::uint64_t r = 1;
      for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
      return r;
    }
    case FunctionFilter::Kind::range_size: {
      const int s = filter.range;
      if (s < 1 || s > n) return 0;
      // inclusion-exclusion for surjections onto s points
      long long surj = 0;
      for (int j = 0; j <= s; ++j) {
        const auto term = static_cast<long long>(binomial(s, j) * power(s - j, n));
        surj += (j % 2 == 0) ? term : -term;
      }
      return binomial(n, s) * static_cast<std::uint64_t>(surj);
    }
  }
  return 0;
}

FunctionStream::FunctionStream(int n, FunctionFilter filter, EnumerationCaps caps) : n_(n), filter_(filter) {
  if (n < 1) throw InputError("function enumeration needs n >= 1");
  if (filter.kind == FunctionFilter::Kind::permutations) enforce_cap(n, caps.max_permutations, "permutation enumeration");
  else enforce_cap(n, caps.max_all, "function enumeration");
  total_ = function_count(n, filter);
}

bool FunctionStream::advance() {
  if (!started_) {
    started_ = true;
    current_.assign(n_, 0);
    if (filter_.kind == FunctionFilter::Kind::permutations) std::iota(current_.begin(), current_.end(), 0);
    return true;
  }
  if (filter_.kind == FunctionFilter::Kind::permutations) return std::next_permutation(current_.begin(), current_.end());
  for (int i = n_ - 1; i >= 0; --i) {
    if (++current_[i] < n_) return true;
    current_[i] = 0;
  }
  return false;
}

bool FunctionStream::accepted() const {
  if (filter_.kind != FunctionFilter::Kind::range_size) return true;
  return count_distinct(current_) == filter_.range;
}

std::optional<VertexFunction> FunctionStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (accepted()) return VertexFunction(current_);
  }
  return std::nullopt;
}

std::vector<VertexFunction> enumerate_functions(int n, FunctionFilter filter, EnumerationCaps caps) {
  FunctionStream stream(n, filter, caps);
  std::vector<VertexFunction> out;
  out.reserve(static_cast<std::size_t>(stream.total()));
  while (auto f = stream.next()) out.push_back(std::move(*f));
  return out;
}

FunctigraphInstance named_construction(std::string_view name, int k) {
  auto need = [&](bool ok, const char* constraint) {
    if (!ok) throw InputError("construction '" + std::string(name) + "' requires " + constraint);
  };
  if (name == "bouquet") {
    need(k >= 3, "k >= 3");
    return build_functigraph(bouquet_graph(k), bouquet_function(k));
  }
  if (name == "path-swap") {
    need(k >= 2, "k >= 2");
    return build_functigraph(path_graph(4 * k), swap_function(4 * k));
  }
  if (name == "cycle-mod") {
    need(k >= 3, "k >= 3");
    return build_functigraph(cycle_graph(k * k), mod_function(k));
  }
  if (name == "path-mod") {
    need(k >= 3, "k >= 3");
    return build_functigraph(path_graph(k * k), mod_function(k));
  }
  if (name == "cycle-low" || name == "path-low") {
    need(k >= 3, "n >= 3");
    std::vector<int> images(k, 0);
    const bool cycle = name == "cycle-low";
    images[k - 1] = cycle ? 1 : k - 1;
    return build_functigraph(cycle ? cycle_graph(k) : path_graph(k), VertexFunction(std::move(images)));
  }
  if (name == "pentagram") {
    need(k == 5, "k == 5");
    return build_functigraph(cycle_graph(5), pentagram_permutation());
  }
  throw InputError("unknown construction '" + std::string(name) + "'");
}

std::string functigraph_label(int v, int n) {
  return v < n ? "u" + std::to_string(v + 1) : "v" + std::to_string(v - n + 1);
}

}  // namespace zf
