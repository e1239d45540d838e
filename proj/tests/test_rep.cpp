#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "trisum/errors.hpp"
#include "trisum/rep.hpp"
#include "test_support.hpp"

using namespace trisum;
using namespace testsupport;

namespace {

// Independent representation-count oracle: plain nested loops over vectors.
std::map<int64_t, int64_t> oracle_counts(const std::vector<IntSet>& sets) {
  std::map<int64_t, int64_t> counts;
  std::vector<int64_t> stack;
  auto recurse = [&](auto&& self, size_t depth, int64_t partial) -> void {
    if (depth == sets.size()) {
      ++counts[partial];
      return;
    }
    for (int64_t a : sets[depth].elements()) self(self, depth + 1, partial + a);
  };
  recurse(recurse, 0, 0);
  return counts;
}

}  // namespace

TEST_CASE("representation counts on pinned examples") {
  IntSet a12 = IntSet::range(1, 2);
  const IntSet pair[] = {a12, a12};
  auto rep = representation_counts(pair);
  CHECK(rep.k == 2);
  CHECK(rep.total == 4);
  CHECK(rep.counts == std::map<int64_t, int64_t>{{2, 1}, {3, 2}, {4, 1}});

  IntSet one({1}, 1);
  const IntSet triple1[] = {one, one, one};
  auto rep1 = representation_counts(triple1);
  CHECK(rep1.counts == std::map<int64_t, int64_t>{{3, 1}});

  IntSet a({1, 7}, 7), c({3, 5, 9, 15, 29}, 29);
  const IntSet hl[] = {a, a, c};
  auto rep_hl = representation_counts(hl);
  CHECK(rep_hl.total == 20);
  // Ordered solutions: (1,1,15), (1,7,9), (7,1,9), (7,7,3).
  CHECK(rep_hl.counts.at(17) == 4);
}

TEST_CASE("representation counts match the nested-loop oracle") {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 30; ++i) {
    std::vector<IntSet> sets;
    const int64_t k = rand_in(rng, 1, 3);
    for (int64_t s = 0; s < k; ++s) sets.push_back(random_set(rng, 60, 12));
    auto rep = representation_counts(sets);
    CHECK(rep.counts == oracle_counts(sets));

    int64_t product = 1, total = 0;
    for (const auto& s : sets) product *= s.size();
    for (const auto& [n, r] : rep.counts) total += r;
    CHECK(rep.total == product);
    CHECK(total == product);

    // support equals the k-fold sumset
    const IntSet sum = k_fold_sumset(sets);
    std::vector<int64_t> support;
    for (const auto& [n, r] : rep.counts) support.push_back(n);
    CHECK(support == sum.elements());
  }
}

TEST_CASE("budget enforcement names the budget") {
  IntSet big = IntSet::range(1, 100);
  const IntSet sets[] = {big, big};
  CHECK_THROWS_AS(representation_counts(sets, 9999), resource_limit_error);
  try {
    representation_counts(sets, 9999);
  } catch (const resource_limit_error& e) {
    CHECK(std::string(e.what()).find("9999") != std::string::npos);
  }
}

TEST_CASE("regularity diagnostic on pinned examples") {
  IntSet a12 = IntSet::range(1, 2);
  const IntSet pair[] = {a12, a12};
  auto report = regularity_diagnostic(pair, 4, 1.0);
  CHECK(report.threshold == doctest::Approx(std::log(4.0)));
  CHECK(report.heavy_set.elements() == std::vector<int64_t>{3});
  CHECK(report.heavy_mass == 2);
  CHECK(report.product == 4);
  CHECK(report.ratio == doctest::Approx(0.5));

  // threshold above max r(n): empty heavy set
  auto empty = regularity_diagnostic(pair, 4, 10.0);
  CHECK(empty.heavy_set.empty());
  CHECK(empty.ratio == 0.0);

  // D = 0: threshold 1, heavy set = {n : r(n) >= 2}
  IntSet a10 = IntSet::range(1, 10);
  const IntSet pair10[] = {a10, a10};
  auto d0 = regularity_diagnostic(pair10, 20, 0.0);
  auto rep = representation_counts(pair10);
  std::vector<int64_t> expect;
  for (const auto& [n, r] : rep.counts)
    if (n <= 20 && r >= 2) expect.push_back(n);
  CHECK(d0.heavy_set.elements() == expect);
}

TEST_CASE("heavy mass decreases in D and the light/heavy split is exact") {
  std::mt19937_64 rng(808);
  for (int i = 0; i < 20; ++i) {
    std::vector<IntSet> sets;
    const int64_t k = rand_in(rng, 2, 3);
    for (int64_t s = 0; s < k; ++s) sets.push_back(random_set(rng, 40, 10));
    int64_t bound_sum = 0;
    for (const auto& s : sets) bound_sum += s.bound();

    int64_t prev_mass = -1;
    for (double d : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      auto report = regularity_diagnostic(sets, bound_sum, d);
      if (prev_mass >= 0) CHECK(report.heavy_mass <= prev_mass);
      prev_mass = report.heavy_mass;
      CHECK(report.ratio >= 0.0);
      CHECK(report.ratio <= 1.0);

      // With x covering the whole sumset, the product splits exactly into
      // light mass + heavy mass.
      auto rep = representation_counts(sets);
      int64_t light = 0;
      for (const auto& [n, r] : rep.counts)
        if (static_cast<double>(r) <= report.threshold) light += r;
      CHECK(report.product == light + report.heavy_mass);
    }
  }
}

TEST_CASE("product versus sumset ratio") {
  IntSet a12 = IntSet::range(1, 2);
  const IntSet pair[] = {a12, a12};
  auto r = product_vs_sumset_ratio(pair, 4);
  CHECK(r.product == 4);
  CHECK(r.sumset_count == 3);
  CHECK(r.ratio == doctest::Approx(4.0 / 3.0));

  IntSet one({1}, 1);
  const IntSet singles[] = {one, one};
  auto rs = product_vs_sumset_ratio(singles, 4);
  CHECK(rs.ratio == doctest::Approx(1.0));
  CHECK(rs.implied_E <= 0.0);

  IntSet a({1, 7}, 7), c({3, 5, 9, 15, 29}, 29);
  const IntSet hl[] = {a, a, c};
  auto rh = product_vs_sumset_ratio(hl, 50);
  CHECK(rh.product == 20);
  const IntSet sum = k_fold_sumset(hl);
  CHECK(rh.sumset_count == sum.count_leq(50));
  CHECK(rh.sumset_count == 11);

  CHECK_THROWS_AS(product_vs_sumset_ratio(pair, 2), std::invalid_argument);  // x >= 3
  IntSet high({40}, 40);
  const IntSet out_of_range[] = {high, high};
  CHECK_THROWS_AS(product_vs_sumset_ratio(out_of_range, 10), std::invalid_argument);
}
