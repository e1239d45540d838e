#include "trisum/sieve_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "trisum/errors.hpp"
#include "trisum/util.hpp"

namespace trisum {

void OmegaMap::set(int64_t p, int64_t w) {
  if (!is_prime_trial(p)) throw std::invalid_argument("OmegaMap: key " + std::to_string(p) + " is not prime");
  if (w < 0 || w >= p)
    throw std::invalid_argument("OmegaMap: omega(" + std::to_string(p) + ") must lie in [0, p)");
  map_[p] = w;
}

int64_t OmegaMap::at(int64_t p) const {
  auto it = map_.find(p);
  if (it == map_.end())
    throw std::invalid_argument("OmegaMap: omega undefined for prime " + std::to_string(p));
  return it->second;
}

bool OmegaMap::contains(int64_t p) const { return map_.count(p) != 0; }

OmegaMap OmegaMap::constant(int64_t w, int64_t max_p) {
  OmegaMap omega;
  for (int64_t p : primes_upto(max_p)) omega.set(p, w);
  return omega;
}

OmegaMap OmegaMap::honest(const IntSet& j, int64_t max_p) {
  if (j.empty()) throw std::invalid_argument("OmegaMap::honest: empty set");
  OmegaMap omega;
  for (int64_t p : primes_upto(max_p)) {
    const auto classes = occupied_classes(j, p);
    omega.set(p, p - static_cast<int64_t>(classes.size()));
  }
  return omega;
}

namespace {

void require_omega_for(const OmegaMap& omega, const std::vector<int64_t>& primes) {
  for (int64_t p : primes)
    if (!omega.contains(p))
      throw std::invalid_argument("omega undefined for prime " + std::to_string(p));
}

}  // namespace

double montgomery_denominator_subsets(int64_t q_cap, const OmegaMap& omega,
                                      std::vector<std::pair<int64_t, double>>* witness) {
  const auto primes = primes_upto(q_cap);
  require_omega_for(omega, primes);

  std::vector<std::pair<int64_t, double>> terms;
  // DFS over squarefree products of primes <= Q; omega(p) = 0 kills a branch.
  auto dfs = [&](auto&& self, size_t idx, int64_t q, double term) -> void {
    terms.emplace_back(q, term);
    for (size_t i = idx; i < primes.size(); ++i) {
      const int64_t p = primes[i];
      if (q > q_cap / p) break;
      const int64_t w = omega.at(p);
      if (w == 0) continue;
      self(self, i + 1, q * p,
           term * static_cast<double>(w) / static_cast<double>(p - w));
    }
  };
  dfs(dfs, 0, 1, 1.0);

  std::sort(terms.begin(), terms.end());
  KahanSum denom;
  for (const auto& [q, term] : terms) denom.add(term);
  if (witness != nullptr) *witness = std::move(terms);
  return denom.value();
}

double montgomery_denominator_sieve(int64_t q_cap, const OmegaMap& omega,
                                    std::vector<std::pair<int64_t, double>>* witness) {
  const auto primes = primes_upto(q_cap);
  require_omega_for(omega, primes);

  // Smallest prime factor sieve for factoring every q <= Q.
  std::vector<int64_t> spf(static_cast<size_t>(q_cap) + 1, 0);
  for (int64_t p : primes)
    for (int64_t m = p; m <= q_cap; m += p)
      if (spf[static_cast<size_t>(m)] == 0) spf[static_cast<size_t>(m)] = p;

  std::vector<std::pair<int64_t, double>> terms;
  KahanSum denom;
  for (int64_t q = 1; q <= q_cap; ++q) {
    double term = 1.0;
    bool squarefree = true;
    bool zero = false;
    int64_t rest = q;
    while (rest > 1) {
      const int64_t p = spf[static_cast<size_t>(rest)];
      rest /= p;
      if (rest % p == 0) {
        squarefree = false;
        break;
      }
      const int64_t w = omega.at(p);
      if (w == 0) {
        zero = true;
        break;
      }
      term *= static_cast<double>(w) / static_cast<double>(p - w);
    }
    if (!squarefree || zero) continue;
    terms.emplace_back(q, term);
    denom.add(term);
  }
  if (witness != nullptr) *witness = std::move(terms);
  return denom.value();
}

SieveReport montgomery_bound(int64_t x, int64_t q_cap, const OmegaMap& omega) {
  if (q_cap < 1) throw std::invalid_argument("montgomery_bound: requires Q >= 1");
  SieveReport report;
  report.method = "montgomery";
  report.params = {{"x", static_cast<double>(x)}, {"Q", static_cast<double>(q_cap)}};
  const double denom = q_cap <= kMontgomerySubsetMaxQ
                           ? montgomery_denominator_subsets(q_cap, omega, &report.witness)
                           : montgomery_denominator_sieve(q_cap, omega, &report.witness);
  report.params["denominator"] = denom;
  report.bound = (static_cast<double>(x) + static_cast<double>(q_cap) * static_cast<double>(q_cap)) / denom;
  return report;
}

SieveReport vaughan_bound(int64_t x, int64_t t_cap, const OmegaMap& omega) {
  if (t_cap < 2) throw std::invalid_argument("vaughan_bound: requires T >= 2");
  if (t_cap * t_cap > x) throw std::invalid_argument("vaughan_bound: requires T <= sqrt(x)");
  const auto primes = primes_upto(t_cap);
  require_omega_for(omega, primes);

  // m = floor(log x / (2 log T)) = max m with T^(2m) <= x, exactly.
  int64_t m = 0;
  int128 acc = 1;
  const int128 t2 = static_cast<int128>(t_cap) * t_cap;
  while (acc <= static_cast<int128>(x) / t2) {
    acc *= t2;
    ++m;
  }

  SieveReport report;
  report.method = "vaughan";
  report.params = {{"x", static_cast<double>(x)},
                   {"T", static_cast<double>(t_cap)},
                   {"m", static_cast<double>(m)}};
  KahanSum s;
  for (int64_t p : primes) {
    const double term = static_cast<double>(omega.at(p)) / static_cast<double>(p);
    report.witness.emplace_back(p, term);
    s.add(term);
  }
  report.params["S"] = s.value();
  if (s.value() == 0.0) {
    report.unbounded = true;
    report.bound = std::numeric_limits<double>::infinity();
    return report;
  }
  report.bound = 2.0 * static_cast<double>(x) /
                 std::pow(s.value() / static_cast<double>(m), static_cast<double>(m));
  return report;
}

SieveReport brun_product_bound(int64_t x, int64_t z, const OmegaMap& omega) {
  const auto primes = primes_upto(z);
  require_omega_for(omega, primes);
  SieveReport report;
  report.method = "brun";
  report.params = {{"x", static_cast<double>(x)}, {"z", static_cast<double>(z)}};
  report.caveat = "main term only; the Brun-sieve implied constant is not estimated";
  double product = 1.0;
  for (int64_t p : primes) {
    const double factor = 1.0 - static_cast<double>(omega.at(p)) / static_cast<double>(p);
    report.witness.emplace_back(p, factor);
    product *= factor;
  }
  report.bound = static_cast<double>(x) * product;
  return report;
}

GallagherSums gallagher_sums(const IntSet& j, int64_t x, int64_t u_cap) {
  if (j.empty()) throw std::invalid_argument("gallagher_sums: empty set");
  if (x < 2) throw std::invalid_argument("gallagher_sums: requires x >= 2");
  if (j.max() > x) throw std::invalid_argument("gallagher_sums: J must lie in [1, x]");

  GallagherSums out;
  out.hypothesis_ok = u_cap < j.size();
  const double n = static_cast<double>(j.size());
  out.lhs_exact = n * n * std::log(static_cast<double>(x));

  const auto primes = primes_upto(u_cap);
  KahanSum rhs;
  for (int64_t p : primes) {
    const auto profile = residue_profile(j, p);
    int64_t squares = 0;
    for (int64_t c : profile.class_counts) squares += c * c;
    rhs.add(std::log(static_cast<double>(p)) * static_cast<double>(squares));
  }
  out.rhs_weighted = rhs.value();

  std::vector<double> logs(primes.size());
  for (size_t i = 0; i < primes.size(); ++i) logs[i] = std::log(static_cast<double>(primes[i]));
  KahanSum pairs;
  const auto& el = j.elements();
  for (size_t a = 0; a < el.size(); ++a) {
    for (size_t b = a + 1; b < el.size(); ++b) {
      const int64_t d = el[b] - el[a];
      double w = 0.0;
      for (size_t i = 0; i < primes.size(); ++i)
        if (d % primes[i] == 0) w += logs[i];
      pairs.add(2.0 * w);  // both ordered pairs
    }
  }
  out.pair_sum = pairs.value();
  return out;
}

double gallagher_occupancy_sum(const IntSet& j, int64_t u_cap) {
  if (j.empty()) throw std::invalid_argument("gallagher_occupancy_sum: empty set");
  if (u_cap < 2) throw std::invalid_argument("gallagher_occupancy_sum: requires U >= 2");
  KahanSum sum;
  for (int64_t p : primes_upto(u_cap)) {
    const auto classes = occupied_classes(j, p);
    sum.add(std::log(static_cast<double>(p)) / static_cast<double>(classes.size()));
  }
  return sum.value();
}

CauchyDavenportCheck cauchy_davenport_check(const IntSet& g, const IntSet& h, int64_t p) {
  if (!is_prime_trial(p))
    throw std::invalid_argument("cauchy_davenport_check: modulus must be prime");
  if (g.empty() || h.empty())
    throw std::invalid_argument("cauchy_davenport_check: empty input set");
  CauchyDavenportCheck check;
  check.h1 = static_cast<int64_t>(occupied_classes(g, p).size());
  check.h2 = static_cast<int64_t>(occupied_classes(h, p).size());
  check.h3 = static_cast<int64_t>(occupied_classes(sumset(g, h), p).size());
  check.bound = std::min(check.h1 + check.h2 - 1, p);
  check.holds = check.h3 >= check.bound;
  if (!check.holds)
    throw internal_error("cauchy_davenport_check: h3 = " + std::to_string(check.h3) +
                         " fell below min(h1+h2-1, p) = " + std::to_string(check.bound) +
                         " at p = " + std::to_string(p));
  return check;
}

SquareMassCheck square_mass_check(const IntSet& j, int64_t m, int64_t k) {
  if (j.empty()) throw std::invalid_argument("square_mass_check: empty set");
  if (m < 2) throw std::invalid_argument("square_mass_check: modulus must be >= 2");
  if (k < 1) throw std::invalid_argument("square_mass_check: requires k >= 1");
  const auto profile = residue_profile(j, m);
  if (profile.h() > k)
    throw std::invalid_argument("square_mass_check: J occupies " + std::to_string(profile.h()) +
                                " classes mod " + std::to_string(m) + ", more than k = " +
                                std::to_string(k));
  SquareMassCheck check;
  for (int64_t c : profile.class_counts) check.mass += c * c;
  const double n = static_cast<double>(j.size());
  check.floor = n * n / static_cast<double>(k);
  check.holds = static_cast<int128>(check.mass) * k >=
                static_cast<int128>(j.size()) * j.size();
  if (!check.holds)
    throw internal_error("square_mass_check: mass " + std::to_string(check.mass) +
                         " fell below |J|^2/k");
  return check;
}

int64_t count_constrained_integers(int64_t x, int64_t k, int64_t r, int64_t q_cap,
                                   double threshold) {
  if (k < 1 || r < 1) throw std::invalid_argument("count_constrained_integers: requires k, r >= 1");
  if (q_cap < 2) throw std::invalid_argument("count_constrained_integers: requires Q >= 2");
  if (x <= 0) return 0;

  const auto primes = primes_upto(q_cap);
  std::vector<double> logs(primes.size());
  for (size_t i = 0; i < primes.size(); ++i) logs[i] = std::log(static_cast<double>(primes[i]));

  constexpr int64_t kBlock = int64_t(1) << 20;
  std::vector<double> weight;
  int64_t count = 0;
  for (int64_t lo = 0; lo < x; lo += kBlock) {
    const int64_t hi = std::min(x, lo + kBlock);
    weight.assign(static_cast<size_t>(hi - lo), 0.0);
    for (size_t i = 0; i < primes.size(); ++i) {
      const int64_t p = primes[i];
      for (int64_t jm = 1; jm <= r; ++jm) {
        // n + jm*k = 0 (mod p)
        const int64_t resid = ((-(jm % p) * (k % p)) % p + p) % p;
        int64_t n = lo + ((resid - lo) % p + p) % p;
        for (; n < hi; n += p) weight[static_cast<size_t>(n - lo)] += logs[i];
      }
    }
    for (double w : weight)
      if (w < threshold) ++count;
  }
  return count;
}

}  // namespace trisum
