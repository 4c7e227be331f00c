#include "zf/limits.hpp"

#include <cstdlib>
#include <string>

#include "zf/errors.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("ZF_MAX_ORDER")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0 && value <= kMaxOrder) limits.max_exact_order = static_cast<int>(value);
  }
  return limits;
}

void enforce_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace zf
