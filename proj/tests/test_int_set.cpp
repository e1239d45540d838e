#include <doctest.h>

#include <random>
#include <stdexcept>

#include "trisum/int_set.hpp"
#include "trisum/prime_table.hpp"
#include "test_support.hpp"

using namespace trisum;
using namespace testsupport;

TEST_CASE("construction normalizes and validates") {
  IntSet s({3, 1, 3, 2}, 10);
  CHECK(s.elements() == std::vector<int64_t>{1, 2, 3});
  CHECK(s.bound() == 10);
  CHECK_THROWS_AS(IntSet({0, 1}, 10), std::invalid_argument);
  CHECK_THROWS_AS(IntSet({-4}, 10), std::invalid_argument);
  CHECK_THROWS_AS(IntSet({11}, 10), std::invalid_argument);
  CHECK(IntSet().empty());
}

TEST_CASE("sumset basics") {
  IntSet a({1, 7}, 7);
  CHECK(sumset(a, a).elements() == std::vector<int64_t>{2, 8, 14});
  CHECK(sumset(a, a).bound() == 14);

  IntSet one({1}, 1);
  CHECK(sumset(one, one).elements() == std::vector<int64_t>{2});

  IntSet small({1, 2, 3}, 3), shifts({10, 20}, 20);
  CHECK(sumset(small, shifts).elements() ==
        std::vector<int64_t>{11, 12, 13, 21, 22, 23});

  CHECK_THROWS_AS(sumset(IntSet(), a), std::invalid_argument);
  CHECK_THROWS_AS(sumset(a, IntSet()), std::invalid_argument);
}

TEST_CASE("merge and bitset sumset paths agree") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 100; ++i) {
    const IntSet a = random_set(rng, rand_in(rng, 1, 500), 60);
    const IntSet b = random_set(rng, rand_in(rng, 1, 500), 60);
    CHECK(sumset_merge(a, b) == sumset_bitset(a, b));
  }
}

TEST_CASE("k-fold sumset") {
  IntSet a({1, 7}, 7), c({3, 5}, 5);
  const IntSet sets1[] = {a, a, c};
  CHECK(k_fold_sumset(sets1).elements() ==
        std::vector<int64_t>{5, 7, 11, 13, 17, 19});

  const IntSet sets2[] = {IntSet({2}, 2)};
  CHECK(k_fold_sumset(sets2).elements() == std::vector<int64_t>{2});

  IntSet two = IntSet::range(1, 2);
  const IntSet sets3[] = {two, two, two};
  CHECK(k_fold_sumset(sets3).elements() == std::vector<int64_t>{3, 4, 5, 6});

  CHECK_THROWS_AS(k_fold_sumset(std::span<const IntSet>{}), std::invalid_argument);
}

TEST_CASE("sumset algebraic properties") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 50; ++i) {
    const IntSet a = random_set(rng, 300, 40);
    const IntSet b = random_set(rng, 300, 40);
    const IntSet c = random_set(rng, 300, 40);
    CHECK(sumset(a, b).elements() == sumset(b, a).elements());
    CHECK(sumset(sumset(a, b), c).elements() == sumset(a, sumset(b, c)).elements());
    const IntSet ab = sumset(a, b);
    CHECK(ab.size() <= a.size() * b.size());
    CHECK(ab.size() >= a.size() + b.size() - 1);  // Cauchy-Davenport over Z
  }
}

TEST_CASE("counting function") {
  IntSet s({2, 8, 14}, 14);
  CHECK(counting_function(s, 10) == 2);
  CHECK(counting_function(s, 1) == 0);
  CHECK(counting_function(s, 14) == s.size());

  PrimeTable table(1000);
  IntSet primes(table.primes(), 1000);
  CHECK(counting_function(primes, 1000) == 168);

  std::mt19937_64 rng(99);
  const IntSet r = random_set(rng, 1000, 100);
  CHECK(counting_function(r, r.bound()) == r.size());
  int64_t prev = 0;
  for (int64_t x = 0; x <= 1000; x += 50) {
    const int64_t now = counting_function(r, x);
    CHECK(now >= prev);
    prev = now;
  }
}

TEST_CASE("translate") {
  IntSet s({1, 3}, 3);
  CHECK(translate(s, 5).elements() == std::vector<int64_t>{6, 8});
  CHECK(translate(s, 5).bound() == 8);
  CHECK(translate(s, 0).elements() == std::vector<int64_t>{1, 3});
  CHECK(translate(IntSet({2, 4}, 4), -1).elements() == std::vector<int64_t>{1, 3});
  CHECK_THROWS_AS(translate(s, -1), std::invalid_argument);
  CHECK_THROWS_AS(translate(IntSet(), 1), std::invalid_argument);
}

TEST_CASE("residue profile") {
  IntSet s({1, 3, 5}, 5);
  auto p3 = residue_profile(s, 3);
  CHECK(p3.class_counts == std::vector<int64_t>{1, 1, 1});
  CHECK(p3.h() == 3);

  auto p2 = residue_profile(s, 2);
  CHECK(p2.class_counts == std::vector<int64_t>{0, 3});
  CHECK(p2.h() == 1);
  CHECK(p2.occupied == std::vector<int64_t>{1});

  PrimeTable table(100);
  IntSet primes(table.primes_in(10, 100), 100);
  auto pp = residue_profile(primes, 3);
  CHECK(pp.h() == 2);  // no prime > 3 is divisible by 3
  CHECK(pp.occupied == std::vector<int64_t>{1, 2});

  CHECK_THROWS_AS(residue_profile(s, 1), std::invalid_argument);
}

TEST_CASE("residue profile properties") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 50; ++i) {
    const IntSet j = random_set(rng, 400, 60);
    const int64_t q = rand_in(rng, 2, 37);
    const auto profile = residue_profile(j, q);
    int64_t total = 0;
    for (int64_t c : profile.class_counts) total += c;
    CHECK(total == j.size());
    CHECK(profile.h() <= std::min<int64_t>(q, j.size()));
    // translation preserves the occupancy count
    const int64_t t = rand_in(rng, 0, 50);
    CHECK(residue_profile(translate(j, t), q).h() == profile.h());
  }
}

TEST_CASE("occupancy difference") {
  IntSet a({1}, 1), b({2}, 2);
  CHECK(occupancy_difference(a, a, 3) == 0);
  CHECK(occupancy_difference(a, b, 3) == 1);
  CHECK(occupancy_difference(IntSet({1, 2, 3}, 3), IntSet({4, 5, 6}, 6), 3) == 0);
}
