#include "trisum/rep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "trisum/errors.hpp"

namespace trisum {

namespace {

int128 size_product(std::span<const IntSet> sets) {
  int128 product = 1;
  for (const IntSet& s : sets) {
    if (s.empty()) throw std::invalid_argument("representation_counts: empty input set");
    product *= s.size();
    if (product > kBinomCap) return kBinomCap;
  }
  return product;
}

}  // namespace

RepFunction representation_counts(std::span<const IntSet> sets, int64_t budget) {
  if (sets.empty()) throw std::invalid_argument("representation_counts: need at least one set");
  const int128 steps = size_product(sets);
  if (steps > budget)
    throw resource_limit_error(
        "representation_counts: enumeration needs more than the budget of " +
        std::to_string(budget) + " steps (override with " + kBudgetEnvVar + ")");

  std::unordered_map<int64_t, int64_t> counts;
  counts.reserve(static_cast<size_t>(std::min<int128>(steps, 1 << 20)));

  const size_t k = sets.size();
  std::vector<size_t> idx(k, 0);
  std::vector<int64_t> partial(k + 1, 0);
  size_t depth = 0;
  while (true) {
    if (depth == k) {
      ++counts[partial[k]];
      // step the odometer
      while (depth > 0) {
        --depth;
        if (++idx[depth] < static_cast<size_t>(sets[depth].size())) break;
        idx[depth] = 0;
        if (depth == 0) {
          RepFunction rep;
          rep.k = static_cast<int64_t>(k);
          rep.total = static_cast<int64_t>(steps);
          rep.counts = std::map<int64_t, int64_t>(counts.begin(), counts.end());
          return rep;
        }
      }
    }
    partial[depth + 1] = partial[depth] + sets[depth].elements()[idx[depth]];
    ++depth;
  }
}

RegularityReport regularity_diagnostic(std::span<const IntSet> sets, int64_t x,
                                       double D, int64_t budget) {
  if (x < 2) throw std::invalid_argument("regularity_diagnostic: requires x >= 2");
  if (D < 0) throw std::invalid_argument("regularity_diagnostic: requires D >= 0");
  const RepFunction rep = representation_counts(sets, budget);

  RegularityReport report;
  report.x = x;
  report.D = D;
  report.threshold = std::pow(std::log(static_cast<double>(x)), D);

  std::vector<int64_t> heavy;
  for (const auto& [n, r] : rep.counts) {
    if (n > x) break;
    if (static_cast<double>(r) > report.threshold) {  // ties are not heavy
      heavy.push_back(n);
      report.heavy_mass += r;
    }
  }
  report.heavy_set = IntSet(std::move(heavy), x);

  report.product = 1;
  for (const IntSet& s : sets) report.product *= s.count_leq(x);
  report.ratio = report.product > 0
                     ? static_cast<double>(report.heavy_mass) / static_cast<double>(report.product)
                     : 0.0;
  return report;
}

ProductSumsetRatio product_vs_sumset_ratio(std::span<const IntSet> sets, int64_t x) {
  if (x < 3) throw std::invalid_argument("product_vs_sumset_ratio: requires x >= 3");
  const IntSet sum = k_fold_sumset(sets);

  ProductSumsetRatio result;
  result.sumset_count = sum.count_leq(x);
  if (result.sumset_count == 0)
    throw std::invalid_argument("product_vs_sumset_ratio: no sumset elements <= x");
  result.product = 1;
  for (const IntSet& s : sets) result.product *= s.count_leq(x);
  result.ratio = static_cast<double>(result.product) / static_cast<double>(result.sumset_count);
  result.implied_E = std::log(result.ratio) / std::log(std::log(static_cast<double>(x)));
  return result;
}

}  // namespace trisum
