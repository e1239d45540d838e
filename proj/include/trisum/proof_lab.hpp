#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trisum/int_set.hpp"

namespace trisum {

// A pair of sets (L in the shifted role, K in the companion role), the
// translation step k and the prime-modulus cap Q.
struct PairContext {
  IntSet L;
  IntSet K;
  int64_t k = 1;
  int64_t Q = 1;
};

// Validates and applies the default Q = max(|L|, |K|) when q_cap == 0.
PairContext make_pair_context(IntSet l, IntSet k_set, int64_t step,
                              int64_t q_cap = 0);

struct DisjointOccupancy {
  bool ok = true;
  int64_t first_violation_prime = 0;
  std::string condition;  // "L/-K overlap", "L+k/-K overlap", "occupancy sum"
};

// For every prime p <= Q: L_p and (L+k)_p must avoid (-K)_p, and
// |L_p| + |K_p| <= p.  Holds automatically when L+K and L+K+k consist of
// primes > Q.
DisjointOccupancy disjoint_occupancy_check(const PairContext& ctx);

struct PairOccupancySums {
  double sum_inv_h = 0.0;    // sum_{p<=Q} log p / h(p)
  double sum_inv_coh = 0.0;  // sum over p with h(p)<p of log p / (p - h(p))
  int64_t skipped_full = 0;  // primes fully occupied by J
};

PairOccupancySums pair_occupancy_sums(const IntSet& j, int64_t q_cap);

// Z = sum_{p<=Q} log p * #{(l,c) in L x K : l + c + j*k = 0 mod p},
// counted exactly through residue profiles.
double weighted_solution_count(const PairContext& ctx, int64_t j);

// Per-prime choice of residue classes G_p; must return a subset of the
// occupied classes of the profiled set.
using ClassSelector = std::function<std::vector<int64_t>(int64_t p)>;

ClassSelector select_occupied(const IntSet& j);
ClassSelector select_translation_diff(const IntSet& j, int64_t step, int64_t j_mult);

struct VarianceSum {
  double X = 0.0;           // sum_{p<=Q} log p sum_{r in G_p} |J(r,p)|^2
  double bound_main = 0.0;  // |J|^2 sum log p |G_p| / (p - |K_p|)^2
  double E1 = 0.0;          // full occupied-square sum
  double E2 = 0.0;          // |J|^2 sum log p / (p - |K_p|)
  double E3 = 0.0;          // |J|^2 sum log p / (p - |J_p|)
  int64_t skipped_full_k = 0;  // primes with |K_p| = p, excluded everywhere
  int64_t skipped_full_j = 0;  // primes with |J_p| = p, excluded from E3
};

// J is ctx.L, K is ctx.K.  The asymptotic slack is reported, never asserted.
VarianceSum variance_sum(const PairContext& ctx, const ClassSelector& selector);

struct TranslationTerm {
  int64_t p = 0;
  int64_t setminus = 0;  // |J_p \ (J - jk)_p|
  int64_t s0 = 0;        // |J_p symdiff (J + k)_p|
  int64_t bound29 = 0;   // 2 (p - |K_p| - |J_p|)
  double term = 0.0;     // log p * setminus / (p - |K_p|)^2, 0 when skipped
};

struct TranslationProfile {
  double profile_sum = 0.0;
  std::vector<TranslationTerm> per_prime_terms;
  int64_t skipped_full = 0;  // primes with |K_p| = p
};

TranslationProfile translation_profile(const PairContext& ctx, int64_t j);

struct SmoothFraction {
  int64_t total = 0;       // |L + K|
  int64_t satisfying = 0;  // elements with divisor log-weight < threshold
  double fraction = 0.0;
};

SmoothFraction njk_smooth_fraction(const PairContext& ctx, int64_t r,
                                   double threshold);

struct Prop4Split {
  double Z = 0.0;   // log-weighted pair count over r in L_p \ (L - jk)_p
  double Z1 = 0.0;  // matching square sum on the L side
  double Z2 = 0.0;  // matching square sum on the K side
  bool cs_holds = true;  // Z <= sqrt(Z1 * Z2), an instance of Cauchy's inequality
};

// The Cauchy-Schwarz split with the translation-difference class choices.
// All three sums share one index set, so cs_holds is unconditional; Z equals
// weighted_solution_count and Z1, Z2 equal the corresponding variance sums
// whenever the disjoint-occupancy conditions hold.
Prop4Split prop4_split(const PairContext& ctx, int64_t j);

struct ThinningStats {
  double rho = 0.0;
  int64_t trials = 0;
  uint64_t seed = 0;
  double epsilon = 0.0;
  std::vector<int64_t> product_sizes;  // |L'| * |C'| per trial
  std::vector<int64_t> sumset_sizes;   // |L' + C'| per trial
  double mean_product = 0.0;
  double variance_product = 0.0;
  double mean_sumset = 0.0;
  double variance_sumset = 0.0;
  double mean_l_size = 0.0;
  double mean_c_size = 0.0;
  double expected_product = 0.0;  // rho^2 |L| |C|
  double event_frequency = 0.0;   // (1 - 6 eps) |L'xC'| < |L'+C'|
};

// Independent Bernoulli(rho) thinning of L and C per trial, driven by a
// counter-based generator so a fixed seed is bit-reproducible.
ThinningStats random_thinning(const IntSet& l, const IntSet& c, double rho,
                              int64_t trials, uint64_t seed, double epsilon);

}  // namespace trisum
