#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trisum/int_set.hpp"

namespace trisum {

// Number of forbidden residue classes omega(p) per prime modulus,
// 0 <= omega(p) < p enforced on insert.
class OmegaMap {
 public:
  void set(int64_t p, int64_t w);
  int64_t at(int64_t p) const;  // throws if p absent
  bool contains(int64_t p) const;
  const std::map<int64_t, int64_t>& values() const { return map_; }

  // omega(p) = w for every prime p <= max_p (w must stay below each p).
  static OmegaMap constant(int64_t w, int64_t max_p);

  // Honest failure counts of a concrete set: omega(p) = p - h(p).
  static OmegaMap honest(const IntSet& j, int64_t max_p);

 private:
  std::map<int64_t, int64_t> map_;
};

// One sieve-bound evaluation with enough audit data to reproduce the
// bound from the witness terms.
struct SieveReport {
  std::string method;
  std::map<std::string, double> params;
  double bound = 0.0;
  bool unbounded = false;  // degenerate input, bound is +infinity
  std::string caveat;
  std::vector<std::pair<int64_t, double>> witness;  // (q or p, contribution)
};

// |J| <= (x + Q^2) / sum over squarefree q <= Q of prod_{p|q} w/(p-w).
// Witness terms are the per-q summands (q = 1 contributes 1).
SieveReport montgomery_bound(int64_t x, int64_t q_cap, const OmegaMap& omega);

// Denominator via subset products of the primes <= Q (small Q) and via a
// squarefree sieve (large Q); montgomery_bound switches on kMontgomerySubsetMaxQ
// and the two must agree.
double montgomery_denominator_subsets(
    int64_t q_cap, const OmegaMap& omega,
    std::vector<std::pair<int64_t, double>>* witness = nullptr);
double montgomery_denominator_sieve(
    int64_t q_cap, const OmegaMap& omega,
    std::vector<std::pair<int64_t, double>>* witness = nullptr);

inline constexpr int64_t kMontgomerySubsetMaxQ = 64;

// |J| <= 2x / ((S/m)^m), S = sum_{p<=T} w(p)/p, m = floor(log x / (2 log T)).
// m is computed by exact integer powering.  S = 0 flags the report unbounded.
SieveReport vaughan_bound(int64_t x, int64_t t_cap, const OmegaMap& omega);

// Main term x * prod_{p<=z} (1 - w(p)/p); the implied constant is not
// modeled and the report carries a caveat saying so.
SieveReport brun_product_bound(int64_t x, int64_t z, const OmegaMap& omega);

struct GallagherSums {
  double lhs_exact = 0.0;     // |J|^2 log x
  double rhs_weighted = 0.0;  // sum_{p<=U} log p sum_c |J(c,p)|^2
  double pair_sum = 0.0;      // sum over ordered pairs of sum_{p<=U, p|d} log p
  bool hypothesis_ok = true;  // U < |J|
};

// Computes all three sums; the exactly provable relation is
// pair_sum < lhs_exact.  U >= |J| is flagged, not an error.
GallagherSums gallagher_sums(const IntSet& j, int64_t x, int64_t u_cap);

// sum_{p <= U} log p / h(p) for non-empty J.
double gallagher_occupancy_sum(const IntSet& j, int64_t u_cap);

struct CauchyDavenportCheck {
  int64_t h1 = 0;
  int64_t h2 = 0;
  int64_t h3 = 0;
  int64_t bound = 0;  // min(h1 + h2 - 1, p)
  bool holds = true;
};

// h3 >= min(h1+h2-1, p) for prime p; a false result is impossible and
// raises internal_error.
CauchyDavenportCheck cauchy_davenport_check(const IntSet& g, const IntSet& h,
                                            int64_t p);

struct SquareMassCheck {
  int64_t mass = 0;    // sum_a |J(a,m)|^2
  double floor = 0.0;  // |J|^2 / k
  bool holds = true;
};

// Requires that J occupies at most k classes mod m; holds is decided by
// exact integer comparison mass * k >= |J|^2 and is always true.
SquareMassCheck square_mass_check(const IntSet& j, int64_t m, int64_t k);

// Count of n in [0, x) whose divisor log-weight
//   sum_{j=1..r} sum_{p <= Q, p | n+jk} log p
// stays strictly below threshold.  Computed by blocked sieving.
int64_t count_constrained_integers(int64_t x, int64_t k, int64_t r,
                                   int64_t q_cap, double threshold);

}  // namespace trisum
