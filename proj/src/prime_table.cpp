#include "trisum/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trisum/util.hpp"

namespace trisum {

namespace {

// Odd primes <= n by a byte sieve; n is at most sqrt(limit).
std::vector<int64_t> base_odd_primes(int64_t n) {
  std::vector<int64_t> out;
  if (n < 3) return out;
  std::vector<uint8_t> composite(static_cast<size_t>(n) + 1, 0);
  for (int64_t i = 3; i <= n; i += 2) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (int64_t m = i * i; m <= n; m += 2 * i) composite[static_cast<size_t>(m)] = 1;
  }
  return out;
}

}  // namespace

PrimeTable::PrimeTable(int64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");

  const int64_t n_odd = limit / 2 + 1;  // bit i <-> odd number 2i+1
  bits_.assign(static_cast<size_t>((n_odd + 63) / 64), ~uint64_t(0));
  bits_[0] &= ~uint64_t(1);  // 1 is not prime

  const auto base = base_odd_primes(isqrt64(limit));
  std::vector<int64_t> next(base.size());
  for (size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

  // Mark composites segment by segment over the odd values.
  for (int64_t seg_lo = 3; seg_lo <= limit; seg_lo += 2 * kSegmentOdds) {
    const int64_t seg_hi = std::min(limit, seg_lo + 2 * kSegmentOdds - 2);
    for (size_t i = 0; i < base.size(); ++i) {
      const int64_t p = base[i];
      if (p * p > seg_hi) break;
      int64_t m = next[i];
      for (; m <= seg_hi; m += 2 * p)
        bits_[static_cast<size_t>(m >> 7)] &= ~(uint64_t(1) << ((m >> 1) & 63));
      next[i] = m;
    }
  }

  primes_.reserve(limit >= 17 ? static_cast<size_t>(pnt_estimate(static_cast<double>(limit)) * 1.1)
                              : 8);
  primes_.push_back(2);
  for (int64_t n = 3; n <= limit; n += 2)
    if (odd_bit(n)) primes_.push_back(n);
}

bool PrimeTable::is_prime(int64_t n) const {
  if (n < 0 || n > limit_) throw std::invalid_argument("PrimeTable::is_prime: value outside table");
  if (n < 2) return false;
  if (n == 2) return true;
  if (n % 2 == 0) return false;
  return odd_bit(n);
}

std::vector<int64_t> PrimeTable::primes_in(int64_t lo, int64_t hi) const {
  if (lo < 0 || lo > hi || hi > limit_)
    throw std::invalid_argument("PrimeTable::primes_in: range outside table");
  auto first = std::upper_bound(primes_.begin(), primes_.end(), lo);
  auto last = std::upper_bound(primes_.begin(), primes_.end(), hi);
  return std::vector<int64_t>(first, last);
}

int64_t PrimeTable::count_leq(int64_t x) const {
  if (x < 0 || x > limit_) throw std::invalid_argument("PrimeTable::count_leq: value outside table");
  return static_cast<int64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                              primes_.begin());
}

double pnt_estimate(double x) {
  if (!(x > 1.0)) throw std::invalid_argument("pnt_estimate: requires x > 1");
  const double lx = std::log(x);
  return x / lx + x / (lx * lx);
}

}  // namespace trisum
