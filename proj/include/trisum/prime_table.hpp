#pragma once

#include <cstdint>
#include <vector>

namespace trisum {

// Primality oracle and sorted prime list up to a fixed limit.
// Flags are stored one bit per odd number (2 is special-cased) and the
// sieve runs in fixed-size segments, so limits up to 1e8 stay cheap.
// Immutable after construction; safe for concurrent reads.
class PrimeTable {
 public:
  // Number of odd values marked per segment.
  static constexpr int64_t kSegmentOdds = int64_t(1) << 18;

  explicit PrimeTable(int64_t limit);

  int64_t limit() const noexcept { return limit_; }

  // n must lie in [0, limit].
  bool is_prime(int64_t n) const;

  const std::vector<int64_t>& primes() const noexcept { return primes_; }

  // All primes p with lo < p <= hi.  Requires 0 <= lo <= hi <= limit.
  std::vector<int64_t> primes_in(int64_t lo, int64_t hi) const;

  // pi(x) for 0 <= x <= limit.
  int64_t count_leq(int64_t x) const;

 private:
  bool odd_bit(int64_t n) const {
    return (bits_[static_cast<size_t>(n >> 7)] >> ((n >> 1) & 63)) & 1;
  }

  int64_t limit_;
  std::vector<uint64_t> bits_;  // bit i <-> 2i+1 is prime
  std::vector<int64_t> primes_;
};

// x/log x + x/(log x)^2, for x > 1.
double pnt_estimate(double x);

}  // namespace trisum
