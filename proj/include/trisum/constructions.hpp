#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trisum/int_set.hpp"
#include "trisum/prime_table.hpp"
#include "trisum/util.hpp"

namespace trisum {

// Strictly increasing non-negative shifts with first element 0; the
// original anchor (what was subtracted to normalize) is kept separately.
struct ShiftPattern {
  std::vector<int64_t> shifts;
  int64_t anchor = 0;

  // Sorts, rejects duplicates, subtracts the minimum.
  static ShiftPattern normalized(std::vector<int64_t> values);

  int64_t size() const { return static_cast<int64_t>(shifts.size()); }
};

struct AdmissibilityResult {
  bool admissible = false;
  int64_t blocking_prime = 0;  // 0 when admissible
};

// A pattern is admissible iff no prime p <= |pattern| has all its residue
// classes covered by the shifts (larger primes can never be covered).
AdmissibilityResult admissibility_check(const ShiftPattern& pattern);

// A triple (A, B, C) with verification status for "A+B+C is all prime"
// and its counting statistics.
struct DecompositionWitness {
  IntSet A, B, C;
  int64_t x = 0;
  bool verified = false;
  int64_t sumset_size = 0;
  std::optional<double> target_bound;
};

// A = B = {1,7}, C = {n <= x : n+2, n+8, n+14 all prime}.
// Requires table.limit >= x + 14.  An empty C yields verified = false.
DecompositionWitness hl_triple(int64_t x, const PrimeTable& table);

struct EstExtraction {
  ShiftPattern A;        // most popular difference pattern, |A| = tau
  IntSet S;              // all anchors realizing it; A + S is inside T
  int64_t guarantee = 0; // ceil(C(|T|,tau) / C(x-1,tau-1)), pigeonhole floor
};

// Most popular difference pattern among tau-subsets of T (ties broken by
// lexicographically smallest pattern).  |S| >= guarantee always.
EstExtraction est_extract(const IntSet& t, int64_t x, int64_t tau,
                          int64_t budget = enumeration_budget());

// Two chained extractions (tau = kappa1 on T, then tau = kappa2 on the
// first anchor set), embedded into a positive witness with the sumset
// A+B+C unchanged and still inside T.
DecompositionWitness est_double_extract(const IntSet& t, int64_t x,
                                        int64_t kappa1, int64_t kappa2,
                                        int64_t budget = enumeration_budget());

// x / (kappa2 * kappa1^kappa2 * (log x)^(kappa1*kappa2)).
double theorem2_bound(int64_t x, int64_t kappa1, int64_t kappa2);

// True iff every element of A+B+C is prime; updates w.verified and
// w.sumset_size.  Requires table.limit >= max A + max B + max C.
bool verify_witness(DecompositionWitness& w, const PrimeTable& table);

}  // namespace trisum
