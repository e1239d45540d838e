#include "trisum/util.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace trisum {

int64_t isqrt64(int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative argument");
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_prime_trial(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<int64_t> primes_upto(int64_t n) {
  std::vector<int64_t> out;
  if (n < 2) return out;
  std::vector<uint8_t> composite(static_cast<size_t>(n) + 1, 0);
  for (int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (int64_t m = i * i; m <= n; m += i) composite[static_cast<size_t>(m)] = 1;
  }
  return out;
}

int128 binom_capped(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int128 result = 1;
  for (int64_t i = 0; i < k; ++i) {
    int128 num = n - i;
    if (result > kBinomCap / num) return kBinomCap;
    result = result * num / (i + 1);  // running product stays integral
    if (result >= kBinomCap) return kBinomCap;
  }
  return result;
}

int64_t ceil_div_positive(int128 a, int128 b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("ceil_div_positive: need positive operands");
  return static_cast<int64_t>((a + b - 1) / b);
}

int64_t enumeration_budget() {
  static const int64_t value = [] {
    const char* env = std::getenv(kBudgetEnvVar);
    if (env == nullptr || *env == '\0') return int64_t(1'000'000'000);
    try {
      long long parsed = std::stoll(env);
      if (parsed > 0) return static_cast<int64_t>(parsed);
    } catch (const std::exception&) {
    }
    return int64_t(1'000'000'000);
  }();
  return value;
}

}  // namespace trisum
