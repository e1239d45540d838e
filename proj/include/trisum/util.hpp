#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace trisum {

using int128 = __int128;

int64_t isqrt64(int64_t n);

// Deterministic trial-division primality check; intended for small n
// (modulus pools, argument validation), not bulk sieving.
bool is_prime_trial(int64_t n);

// All primes <= n by a simple sieve.  Used for modulus pools p <= Q;
// bulk prime generation lives in PrimeTable.
std::vector<int64_t> primes_upto(int64_t n);

// Neumaier-compensated summation.  Sieve reports promise that their
// witness terms reproduce the total to 1e-9 relative, so every log-weight
// sum goes through this accumulator in a fixed order.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// splitmix64 finalizer.
constexpr uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Counter-based uniform in [0,1): a pure function of (seed, a, b, c), so
// randomized trials are reproducible and order-independent.
inline double unit_uniform(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  uint64_t h = mix64(seed + kGolden);
  h = mix64(h ^ (a + kGolden));
  h = mix64(h ^ (b + kGolden));
  h = mix64(h ^ (c + kGolden));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Saturating cap for exact binomials; far above any value a guarantee
// computation can need on the numerator side.
inline constexpr int128 kBinomCap = static_cast<int128>(1) << 100;

// C(n, k), exact up to kBinomCap, saturating beyond it.
int128 binom_capped(int64_t n, int64_t k);

// ceil(a / b) for positive a, b.
int64_t ceil_div_positive(int128 a, int128 b);

// Elementary-step budget for combinatorial enumerations
// (default 1e9, overridable via the TRISUM_ENUM_BUDGET environment variable).
int64_t enumeration_budget();

inline constexpr const char* kBudgetEnvVar = "TRISUM_ENUM_BUDGET";

}  // namespace trisum
