#pragma once

namespace zf {

// Size caps for the exponential routines. These are configuration, not
// algorithmic limits; ZF_MAX_ORDER overrides max_exact_order.
struct Limits {
  int max_exact_order = 32;          // exact zero forcing number search
  int max_path_cover_order = 16;     // path cover DP over 2^n subsets
  int max_minimum_sets_order = 16;   // all_minimum_sets
  int max_all_functions = 6;         // n^n enumeration
  int max_permutations = 8;          // n! enumeration
  int max_exhaustive_permutation_audit = 6;
  int max_complete_audit = 5;         // n^n functigraphs on K_n
  int max_product_order = 20;

  // Defaults with ZF_MAX_ORDER applied when set to a positive integer.
  static Limits from_environment();
};

// Throws CapExceeded when n > cap; `what` names the routine.
void enforce_cap(int n, int cap, const char* what);

}  // namespace zf
