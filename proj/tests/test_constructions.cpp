#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "trisum/constructions.hpp"
#include "trisum/errors.hpp"
#include "test_support.hpp"

using namespace trisum;
using namespace testsupport;

TEST_CASE("shift pattern normalization") {
  auto p = ShiftPattern::normalized({2, 8, 14});
  CHECK(p.shifts == std::vector<int64_t>{0, 6, 12});
  CHECK(p.anchor == 2);
  CHECK_THROWS_AS(ShiftPattern::normalized({}), std::invalid_argument);
  CHECK_THROWS_AS(ShiftPattern::normalized({3, 3}), std::invalid_argument);
}

TEST_CASE("admissibility check") {
  CHECK(admissibility_check(ShiftPattern::normalized({0, 6, 12})).admissible);
  CHECK(admissibility_check(ShiftPattern::normalized({2, 8, 14})).admissible);

  auto mod2 = admissibility_check(ShiftPattern::normalized({0, 1}));
  CHECK_FALSE(mod2.admissible);
  CHECK(mod2.blocking_prime == 2);

  auto mod3 = admissibility_check(ShiftPattern::normalized({0, 2, 4}));
  CHECK_FALSE(mod3.admissible);
  CHECK(mod3.blocking_prime == 3);

  // {0, d, 2d} with d = 0 mod 6 is always admissible
  for (int64_t d : {6, 12, 18, 24, 600}) {
    CHECK(admissibility_check(ShiftPattern::normalized({0, d, 2 * d})).admissible);
  }
}

TEST_CASE("hl triple at x = 30") {
  PrimeTable table(100);
  auto w = hl_triple(30, table);
  CHECK(w.C.elements() == std::vector<int64_t>{3, 5, 9, 15, 29});
  CHECK(w.A.elements() == std::vector<int64_t>{1, 7});
  CHECK(w.verified);
  CHECK_FALSE(w.target_bound.has_value());

  // oracle: recompute C by trial division
  std::vector<int64_t> expect;
  for (int64_t n = 1; n <= 30; ++n)
    if (oracle_is_prime(n + 2) && oracle_is_prime(n + 8) && oracle_is_prime(n + 14))
      expect.push_back(n);
  CHECK(w.C.elements() == expect);

  const IntSet ab[] = {w.A, w.B};
  CHECK(k_fold_sumset(ab).elements() == std::vector<int64_t>{2, 8, 14});
  CHECK(w.C.size() <= w.sumset_size);
  CHECK(w.sumset_size <= 3 * w.C.size());
}

TEST_CASE("hl triple with empty C is flagged unverified") {
  PrimeTable table(50);
  auto w = hl_triple(2, table);
  CHECK(w.C.empty());
  CHECK_FALSE(w.verified);
  CHECK(w.sumset_size == 0);
}

TEST_CASE("hl triple table precondition") {
  PrimeTable table(40);
  CHECK_THROWS_AS(hl_triple(30, table), std::invalid_argument);
}

TEST_CASE("est extraction on the contiguous range") {
  auto e = est_extract(IntSet::range(1, 10), 10, 2);
  CHECK(e.A.shifts == std::vector<int64_t>{0, 1});
  CHECK(e.S.elements() == IntSet::range(1, 9).elements());
  CHECK(e.guarantee == 5);  // ceil(45/9)
}

TEST_CASE("est extraction on primes up to 100") {
  PrimeTable table(100);
  IntSet t(table.primes(), 100);
  auto e = est_extract(t, 100, 2);
  CHECK(e.guarantee == 4);  // ceil(C(25,2)/99) = ceil(300/99)
  CHECK(e.A.shifts == std::vector<int64_t>{0, 6});
  CHECK(e.S.size() == 15);

  // oracle: exhaustive pair enumeration
  std::map<int64_t, int64_t> gaps;
  const auto& el = t.elements();
  for (size_t i = 0; i < el.size(); ++i)
    for (size_t j = i + 1; j < el.size(); ++j) ++gaps[el[j] - el[i]];
  int64_t best_d = 0, best_count = 0;
  for (const auto& [d, count] : gaps)
    if (count > best_count) {
      best_count = count;
      best_d = d;
    }
  CHECK(best_d == 6);
  CHECK(best_count == 15);
}

TEST_CASE("est extraction degenerate tau = 1") {
  IntSet t({4, 9, 11}, 20);
  auto e = est_extract(t, 20, 1);
  CHECK(e.A.shifts == std::vector<int64_t>{0});
  CHECK(e.S == t);
  CHECK(e.guarantee == 3);
}

TEST_CASE("est extraction cross-checked against subset enumeration for tau = 3") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 10; ++iter) {
    const int64_t universe = rand_in(rng, 20, 80);
    IntSet t = random_set(rng, universe, 25);
    while (t.size() < 3) t = random_set(rng, universe, 25);
    auto e = est_extract(t, universe, 3);

    // oracle: enumerate all 3-subsets, count patterns, pick (count, lex) best
    std::map<std::vector<int64_t>, int64_t> counts;
    const auto& el = t.elements();
    for (size_t i = 0; i < el.size(); ++i)
      for (size_t j = i + 1; j < el.size(); ++j)
        for (size_t k = j + 1; k < el.size(); ++k)
          ++counts[{el[j] - el[i], el[k] - el[i]}];
    int64_t best = 0;
    std::vector<int64_t> best_pattern;
    for (const auto& [pattern, count] : counts)
      if (count > best || (count == best && pattern < best_pattern)) {
        best = count;
        best_pattern = pattern;
      }
    CHECK(e.A.shifts == std::vector<int64_t>{0, best_pattern[0], best_pattern[1]});
    CHECK(e.S.size() == best);
    CHECK(e.S.size() >= e.guarantee);
  }
}

TEST_CASE("est extraction invariants on random sets") {
  std::mt19937_64 rng(515);
  for (int iter = 0; iter < 40; ++iter) {
    const int64_t universe = rand_in(rng, 10, 400);
    IntSet t = random_set(rng, universe, 60);
    const int64_t tau = rand_in(rng, 1, std::min<int64_t>(3, t.size()));
    auto e = est_extract(t, universe, tau);
    CHECK(e.A.size() == tau);
    CHECK(e.S.size() >= e.guarantee);
    for (int64_t anchor : e.S.elements())
      for (int64_t shift : e.A.shifts) CHECK(t.contains(anchor + shift));
  }
}

TEST_CASE("est extraction argument validation") {
  IntSet t = IntSet::range(1, 10);
  CHECK_THROWS_AS(est_extract(IntSet(), 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(est_extract(t, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(est_extract(t, 10, 11), std::invalid_argument);
  CHECK_THROWS_AS(est_extract(t, 5, 2), std::invalid_argument);      // T beyond x
  CHECK_THROWS_AS(est_extract(t, 10, 2, 10), resource_limit_error);  // 45 pairs > 10
}

TEST_CASE("est double extraction on a hand-checked case") {
  // T = {2,3,5,7}: popular gap 2 anchored at {3,5}; second stage gap 2
  // anchored at {3}.  Embedded positively: A = B = {1,3}, C = {1}.
  IntSet t({2, 3, 5, 7}, 7);
  auto w = est_double_extract(t, 7, 2, 2);
  CHECK(w.A.elements() == std::vector<int64_t>{1, 3});
  CHECK(w.B.elements() == std::vector<int64_t>{1, 3});
  CHECK(w.C.elements() == std::vector<int64_t>{1});
  const IntSet parts[] = {w.A, w.B, w.C};
  CHECK(k_fold_sumset(parts).elements() == std::vector<int64_t>{3, 5, 7});

  PrimeTable table(20);
  CHECK(verify_witness(w, table));
}

TEST_CASE("est double extraction on primes up to 2000") {
  PrimeTable table(2000);
  IntSet t(table.primes(), 2000);
  auto w = est_double_extract(t, 2000, 2, 2);
  CHECK(w.A.size() == 2);
  CHECK(w.B.size() == 2);
  CHECK(verify_witness(w, table));
  CHECK(w.sumset_size >= w.C.size());  // translation injectivity
  CHECK(w.target_bound.has_value());
  CHECK(*w.target_bound == doctest::Approx(theorem2_bound(2000, 2, 2)));
  CHECK(static_cast<double>(w.C.size()) >= *w.target_bound);
}

TEST_CASE("est double extraction degenerate kappa = 1 chain") {
  // On a set of odd primes the chain A = B = {1}, C = T - 2 survives intact.
  IntSet t({3, 5, 7, 11}, 11);
  auto w = est_double_extract(t, 11, 1, 1);
  CHECK(w.A.elements() == std::vector<int64_t>{1});
  CHECK(w.B.elements() == std::vector<int64_t>{1});
  CHECK(w.C.elements() == std::vector<int64_t>{1, 3, 5, 9});
  const IntSet parts[] = {w.A, w.B, w.C};
  CHECK(k_fold_sumset(parts).elements() == t.elements());
}

TEST_CASE("est double extraction failure modes") {
  // second-stage anchors below 3 cannot be embedded positively
  IntSet t({2, 3, 5, 7}, 7);
  CHECK_THROWS_AS(est_double_extract(t, 7, 1, 1), extraction_failed);
  // first anchor set smaller than kappa2
  IntSet sparse({1, 10, 100}, 1000);
  CHECK_THROWS_AS(est_double_extract(sparse, 1000, 2, 2), extraction_failed);
}

TEST_CASE("theorem 2 bound") {
  CHECK(theorem2_bound(22026, 2, 2) == doctest::Approx(0.2753).epsilon(1e-3));
  CHECK(theorem2_bound(1000, 2, 2) == doctest::Approx(0.0549).epsilon(1e-2));
  const double x = 1000.0;
  CHECK(theorem2_bound(1000, 1, 1) == doctest::Approx(x / std::log(x)));
  CHECK_THROWS_AS(theorem2_bound(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem2_bound(100, 0, 1), std::invalid_argument);
}

TEST_CASE("verify witness") {
  PrimeTable table(20);
  DecompositionWitness good{IntSet({1}, 1), IntSet({1}, 1), IntSet({1}, 1), 1, false, 0, {}};
  CHECK(verify_witness(good, table));
  CHECK(good.verified);
  CHECK(good.sumset_size == 1);

  DecompositionWitness bad{IntSet({1}, 1), IntSet({1}, 1), IntSet({2}, 2), 2, false, 0, {}};
  CHECK_FALSE(verify_witness(bad, table));

  DecompositionWitness too_big{IntSet({10}, 10), IntSet({10}, 10), IntSet({10}, 10), 10, false, 0, {}};
  CHECK_THROWS_AS(verify_witness(too_big, table), std::invalid_argument);
}
