#include "trisum/proof_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trisum/errors.hpp"
#include "trisum/util.hpp"

namespace trisum {

namespace {

std::vector<uint8_t> occupancy_bits(const IntSet& s, int64_t p) {
  std::vector<uint8_t> bits(static_cast<size_t>(p), 0);
  for (int64_t e : s.elements()) bits[static_cast<size_t>(e % p)] = 1;
  return bits;
}

int64_t popcount(const std::vector<uint8_t>& bits) {
  int64_t n = 0;
  for (uint8_t b : bits) n += b;
  return n;
}

// Rotation (J + shift)_p of an occupancy vector; shift may be negative.
std::vector<uint8_t> rotated(const std::vector<uint8_t>& bits, int64_t shift) {
  const auto p = static_cast<int64_t>(bits.size());
  const int64_t s = ((shift % p) + p) % p;
  std::vector<uint8_t> out(bits.size(), 0);
  for (int64_t r = 0; r < p; ++r)
    if (bits[static_cast<size_t>(r)]) out[static_cast<size_t>((r + s) % p)] = 1;
  return out;
}

double log_d(int64_t p) { return std::log(static_cast<double>(p)); }

}  // namespace

PairContext make_pair_context(IntSet l, IntSet k_set, int64_t step, int64_t q_cap) {
  if (l.empty() || k_set.empty())
    throw std::invalid_argument("PairContext: L and K must be non-empty");
  if (step < 1) throw std::invalid_argument("PairContext: step k must be >= 1");
  if (q_cap == 0) q_cap = std::max(l.size(), k_set.size());
  if (q_cap < 1) throw std::invalid_argument("PairContext: Q must be >= 1");
  return PairContext{std::move(l), std::move(k_set), step, q_cap};
}

DisjointOccupancy disjoint_occupancy_check(const PairContext& ctx) {
  for (int64_t p : primes_upto(ctx.Q)) {
    const auto l_bits = occupancy_bits(ctx.L, p);
    const auto k_bits = occupancy_bits(ctx.K, p);
    // (-K)_p
    std::vector<uint8_t> neg_k(static_cast<size_t>(p), 0);
    for (int64_t r = 0; r < p; ++r)
      if (k_bits[static_cast<size_t>(r)]) neg_k[static_cast<size_t>((p - r) % p)] = 1;

    for (int64_t r = 0; r < p; ++r)
      if (l_bits[static_cast<size_t>(r)] && neg_k[static_cast<size_t>(r)])
        return {false, p, "L/-K overlap"};
    const auto l_shift = rotated(l_bits, ctx.k);
    for (int64_t r = 0; r < p; ++r)
      if (l_shift[static_cast<size_t>(r)] && neg_k[static_cast<size_t>(r)])
        return {false, p, "L+k/-K overlap"};
    if (popcount(l_bits) + popcount(k_bits) > p) return {false, p, "occupancy sum"};
  }
  return {true, 0, ""};
}

PairOccupancySums pair_occupancy_sums(const IntSet& j, int64_t q_cap) {
  if (j.empty()) throw std::invalid_argument("pair_occupancy_sums: empty set");
  if (q_cap < 2) throw std::invalid_argument("pair_occupancy_sums: requires Q >= 2");
  PairOccupancySums out;
  KahanSum inv_h, inv_coh;
  for (int64_t p : primes_upto(q_cap)) {
    const int64_t h = popcount(occupancy_bits(j, p));
    inv_h.add(log_d(p) / static_cast<double>(h));
    if (h < p)
      inv_coh.add(log_d(p) / static_cast<double>(p - h));
    else
      ++out.skipped_full;
  }
  out.sum_inv_h = inv_h.value();
  out.sum_inv_coh = inv_coh.value();
  return out;
}

double weighted_solution_count(const PairContext& ctx, int64_t j) {
  if (j < 1) throw std::invalid_argument("weighted_solution_count: requires j >= 1");
  KahanSum z;
  for (int64_t p : primes_upto(ctx.Q)) {
    const auto prof_l = residue_profile(ctx.L, p);
    const auto prof_k = residue_profile(ctx.K, p);
    const int64_t jk = ((j % p) * (ctx.k % p)) % p;
    int64_t pairs = 0;
    for (int64_t r : prof_l.occupied) {
      const int64_t target = ((-r - jk) % p + 2 * p) % p;
      pairs += prof_l.class_counts[static_cast<size_t>(r)] *
               prof_k.class_counts[static_cast<size_t>(target)];
    }
    z.add(log_d(p) * static_cast<double>(pairs));
  }
  return z.value();
}

ClassSelector select_occupied(const IntSet& j) {
  return [j](int64_t p) { return occupied_classes(j, p); };
}

ClassSelector select_translation_diff(const IntSet& j, int64_t step, int64_t j_mult) {
  return [j, step, j_mult](int64_t p) {
    const auto bits = occupancy_bits(j, p);
    const auto shifted = rotated(bits, -j_mult * step);  // (J - jk)_p
    std::vector<int64_t> out;
    for (int64_t r = 0; r < p; ++r)
      if (bits[static_cast<size_t>(r)] && !shifted[static_cast<size_t>(r)]) out.push_back(r);
    return out;
  };
}

VarianceSum variance_sum(const PairContext& ctx, const ClassSelector& selector) {
  VarianceSum out;
  const double j_size = static_cast<double>(ctx.L.size());
  const double j_sq = j_size * j_size;
  KahanSum x_sum, bound_sum, e1, e2, e3;
  for (int64_t p : primes_upto(ctx.Q)) {
    const auto prof_j = residue_profile(ctx.L, p);
    const int64_t h_k = popcount(occupancy_bits(ctx.K, p));
    if (h_k == p) {
      ++out.skipped_full_k;
      continue;
    }
    const double denom = static_cast<double>(p - h_k);

    std::vector<int64_t> selected = selector(p);
    std::sort(selected.begin(), selected.end());
    if (std::adjacent_find(selected.begin(), selected.end()) != selected.end())
      throw std::invalid_argument("variance_sum: selector returned a duplicate class");
    int64_t sel_squares = 0;
    for (int64_t r : selected) {
      if (r < 0 || r >= p || prof_j.class_counts[static_cast<size_t>(r)] == 0)
        throw std::invalid_argument("variance_sum: selector chose class " + std::to_string(r) +
                                    " not occupied mod " + std::to_string(p));
      const int64_t c = prof_j.class_counts[static_cast<size_t>(r)];
      sel_squares += c * c;
    }
    x_sum.add(log_d(p) * static_cast<double>(sel_squares));
    bound_sum.add(log_d(p) * static_cast<double>(selected.size()) / (denom * denom));

    int64_t occ_squares = 0;
    for (int64_t r : prof_j.occupied) {
      const int64_t c = prof_j.class_counts[static_cast<size_t>(r)];
      occ_squares += c * c;
    }
    e1.add(log_d(p) * static_cast<double>(occ_squares));
    e2.add(log_d(p) / denom);
    if (prof_j.h() < p)
      e3.add(log_d(p) / static_cast<double>(p - prof_j.h()));
    else
      ++out.skipped_full_j;
  }
  out.X = x_sum.value();
  out.bound_main = j_sq * bound_sum.value();
  out.E1 = e1.value();
  out.E2 = j_sq * e2.value();
  out.E3 = j_sq * e3.value();
  return out;
}

TranslationProfile translation_profile(const PairContext& ctx, int64_t j) {
  if (j < 1) throw std::invalid_argument("translation_profile: requires j >= 1");
  TranslationProfile out;
  KahanSum sum;
  for (int64_t p : primes_upto(ctx.Q)) {
    const auto j_bits = occupancy_bits(ctx.L, p);
    const auto minus_jk = rotated(j_bits, -j * ctx.k);  // (J - jk)_p
    const auto plus_k = rotated(j_bits, ctx.k);         // (J + k)_p
    const int64_t h_j = popcount(j_bits);
    const int64_t h_k = popcount(occupancy_bits(ctx.K, p));

    TranslationTerm term;
    term.p = p;
    for (int64_t r = 0; r < p; ++r) {
      const auto i = static_cast<size_t>(r);
      term.setminus += (j_bits[i] && !minus_jk[i]) ? 1 : 0;
      term.s0 += (j_bits[i] != plus_k[i]) ? 1 : 0;
    }
    term.bound29 = 2 * (p - h_k - h_j);
    if (h_k < p) {
      const double denom = static_cast<double>(p - h_k);
      term.term = log_d(p) * static_cast<double>(term.setminus) / (denom * denom);
      sum.add(term.term);
    } else {
      ++out.skipped_full;
    }
    out.per_prime_terms.push_back(term);
  }
  out.profile_sum = sum.value();
  return out;
}

SmoothFraction njk_smooth_fraction(const PairContext& ctx, int64_t r, double threshold) {
  if (r < 1) throw std::invalid_argument("njk_smooth_fraction: requires r >= 1");
  const IntSet sum = sumset(ctx.L, ctx.K);
  const auto primes = primes_upto(ctx.Q);
  std::vector<double> logs(primes.size());
  for (size_t i = 0; i < primes.size(); ++i) logs[i] = log_d(primes[i]);

  SmoothFraction out;
  out.total = sum.size();
  for (int64_t n : sum.elements()) {
    KahanSum weight;
    for (int64_t jm = 1; jm <= r; ++jm) {
      const int64_t value = n + jm * ctx.k;
      for (size_t i = 0; i < primes.size(); ++i)
        if (value % primes[i] == 0) weight.add(logs[i]);
    }
    if (weight.value() < threshold) ++out.satisfying;
  }
  out.fraction = static_cast<double>(out.satisfying) / static_cast<double>(out.total);
  return out;
}

Prop4Split prop4_split(const PairContext& ctx, int64_t j) {
  if (j < 1) throw std::invalid_argument("prop4_split: requires j >= 1");
  // All three sums run over the same index set {(p, r) : p <= Q,
  // r in L_p \ (L - jk)_p}, so Z <= sqrt(Z1 Z2) is Cauchy's inequality
  // verbatim.  Z coincides with weighted_solution_count, and Z1, Z2 with
  // the translation-difference variance sums, whenever the disjointness
  // conditions hold (classes outside the restriction then contribute
  // nothing and no prime is fully occupied).
  Prop4Split out;
  KahanSum z, z1, z2;
  for (int64_t p : primes_upto(ctx.Q)) {
    const auto prof_l = residue_profile(ctx.L, p);
    const auto prof_k = residue_profile(ctx.K, p);
    std::vector<uint8_t> l_bits(static_cast<size_t>(p), 0);
    for (int64_t r : prof_l.occupied) l_bits[static_cast<size_t>(r)] = 1;
    const auto l_shift = rotated(l_bits, -j * ctx.k);  // (L - jk)_p
    const int64_t jk = (((j % p) * (ctx.k % p)) % p + p) % p;
    const double lg = log_d(p);
    for (int64_t r = 0; r < p; ++r) {
      if (!l_bits[static_cast<size_t>(r)] || l_shift[static_cast<size_t>(r)]) continue;
      const int64_t target = ((-r - jk) % p + 2 * p) % p;
      const auto a = static_cast<double>(prof_l.class_counts[static_cast<size_t>(r)]);
      const auto b = static_cast<double>(prof_k.class_counts[static_cast<size_t>(target)]);
      z.add(lg * a * b);
      z1.add(lg * a * a);
      z2.add(lg * b * b);
    }
  }
  out.Z = z.value();
  out.Z1 = z1.value();
  out.Z2 = z2.value();
  out.cs_holds = out.Z * out.Z <= out.Z1 * out.Z2 * (1.0 + 1e-9) + 1e-12;
  return out;
}

ThinningStats random_thinning(const IntSet& l, const IntSet& c, double rho, int64_t trials,
                              uint64_t seed, double epsilon) {
  if (!(rho >= 0.0 && rho <= 1.0))
    throw std::invalid_argument("random_thinning: rho must lie in [0, 1]");
  if (trials < 1) throw std::invalid_argument("random_thinning: requires trials >= 1");
  if (l.empty() || c.empty()) throw std::invalid_argument("random_thinning: empty input set");

  ThinningStats stats;
  stats.rho = rho;
  stats.trials = trials;
  stats.seed = seed;
  stats.epsilon = epsilon;
  stats.expected_product =
      rho * rho * static_cast<double>(l.size()) * static_cast<double>(c.size());
  stats.product_sizes.reserve(static_cast<size_t>(trials));
  stats.sumset_sizes.reserve(static_cast<size_t>(trials));

  KahanSum sum_l, sum_c;
  int64_t events = 0;
  std::vector<int64_t> l_sub, c_sub;
  for (int64_t trial = 0; trial < trials; ++trial) {
    l_sub.clear();
    c_sub.clear();
    for (size_t i = 0; i < l.elements().size(); ++i)
      if (unit_uniform(seed, static_cast<uint64_t>(trial), 0, i) < rho)
        l_sub.push_back(l.elements()[i]);
    for (size_t i = 0; i < c.elements().size(); ++i)
      if (unit_uniform(seed, static_cast<uint64_t>(trial), 1, i) < rho)
        c_sub.push_back(c.elements()[i]);

    const auto l_size = static_cast<int64_t>(l_sub.size());
    const auto c_size = static_cast<int64_t>(c_sub.size());
    const int64_t product = l_size * c_size;
    int64_t sum_size = 0;
    if (product > 0) {
      const IntSet ls(l_sub, l.bound());
      const IntSet cs(c_sub, c.bound());
      sum_size = sumset(ls, cs).size();
    }
    stats.product_sizes.push_back(product);
    stats.sumset_sizes.push_back(sum_size);
    sum_l.add(static_cast<double>(l_size));
    sum_c.add(static_cast<double>(c_size));
    if ((1.0 - 6.0 * epsilon) * static_cast<double>(product) < static_cast<double>(sum_size))
      ++events;
  }

  auto mean_of = [trials](const std::vector<int64_t>& v) {
    KahanSum s;
    for (int64_t x : v) s.add(static_cast<double>(x));
    return s.value() / static_cast<double>(trials);
  };
  auto variance_of = [trials](const std::vector<int64_t>& v, double mean) {
    KahanSum s;
    for (int64_t x : v) {
      const double d = static_cast<double>(x) - mean;
      s.add(d * d);
    }
    return s.value() / static_cast<double>(trials);
  };
  stats.mean_product = mean_of(stats.product_sizes);
  stats.variance_product = variance_of(stats.product_sizes, stats.mean_product);
  stats.mean_sumset = mean_of(stats.sumset_sizes);
  stats.variance_sumset = variance_of(stats.sumset_sizes, stats.mean_sumset);
  stats.mean_l_size = sum_l.value() / static_cast<double>(trials);
  stats.mean_c_size = sum_c.value() / static_cast<double>(trials);
  stats.event_frequency = static_cast<double>(events) / static_cast<double>(trials);
  return stats;
}

}  // namespace trisum
