#include "zf/vertex_set.hpp"

#include <algorithm>

namespace zf {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  for (int i = 0; i < kWords && n > 0; ++i, n -= 64)
    s.words_[i] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return s;
}

VertexSet VertexSet::from_vector(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

int VertexSet::first() const {
  for (int i = 0; i < kWords; ++i)
    if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= kMaxOrder) return -1;
  int i = start >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w) return i * 64 + std::countr_zero(w);
    if (++i >= kWords) return -1;
    w = words_[i];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

bool lexicographically_less(const VertexSet& a, const VertexSet& b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace zf
