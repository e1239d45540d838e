#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "trisum/int_set.hpp"
#include "trisum/util.hpp"

namespace trisum {

// r(n; A_1,...,A_k): number of ways to write n = a_1 + ... + a_k.
// counts holds only n with r(n) > 0; its key set equals the k-fold sumset
// and total equals the product of the set sizes.
struct RepFunction {
  int64_t k = 0;
  std::map<int64_t, int64_t> counts;
  int64_t total = 0;
};

// Exact counts by nested enumeration.  The number of elementary steps is
// the product of the set sizes; exceeding the budget raises
// resource_limit_error.
RepFunction representation_counts(std::span<const IntSet> sets,
                                  int64_t budget = enumeration_budget());

// Heavy-sum diagnostic at (x, D): which n <= x carry representation counts
// above log^D x, and what fraction of the product mass they hold.
struct RegularityReport {
  int64_t x = 0;
  double D = 0.0;
  double threshold = 0.0;  // log^D x
  IntSet heavy_set;        // {n <= x : r(n) > threshold}
  int64_t heavy_mass = 0;  // sum of r(n) over the heavy set
  int64_t product = 0;     // A_1(x) * ... * A_k(x)
  double ratio = 0.0;      // heavy_mass / product (empirical epsilon)
};

RegularityReport regularity_diagnostic(std::span<const IntSet> sets, int64_t x,
                                       double D,
                                       int64_t budget = enumeration_budget());

struct ProductSumsetRatio {
  int64_t product = 0;       // A_1(x) * ... * A_k(x)
  int64_t sumset_count = 0;  // (A_1 + ... + A_k)(x)
  double ratio = 0.0;        // product / sumset_count
  double implied_E = 0.0;    // log(ratio)/log log x
};

// Requires x >= 3 and at least one sumset element <= x.
ProductSumsetRatio product_vs_sumset_ratio(std::span<const IntSet> sets,
                                           int64_t x);

}  // namespace trisum
