#include "trisum/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "trisum/errors.hpp"

namespace trisum {

ShiftPattern ShiftPattern::normalized(std::vector<int64_t> values) {
  if (values.empty()) throw std::invalid_argument("ShiftPattern: empty pattern");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw std::invalid_argument("ShiftPattern: duplicate shifts");
  ShiftPattern pattern;
  pattern.anchor = values.front();
  pattern.shifts = std::move(values);
  for (int64_t& s : pattern.shifts) s -= pattern.anchor;
  return pattern;
}

AdmissibilityResult admissibility_check(const ShiftPattern& pattern) {
  const int64_t k = pattern.size();
  for (int64_t p : primes_upto(k)) {
    std::vector<uint8_t> seen(static_cast<size_t>(p), 0);
    int64_t covered = 0;
    for (int64_t s : pattern.shifts) {
      const auto r = static_cast<size_t>(((s % p) + p) % p);
      if (!seen[r]) {
        seen[r] = 1;
        ++covered;
      }
    }
    if (covered == p) return {false, p};
  }
  return {true, 0};
}

DecompositionWitness hl_triple(int64_t x, const PrimeTable& table) {
  if (x < 1) throw std::invalid_argument("hl_triple: requires x >= 1");
  if (table.limit() < x + 14)
    throw std::invalid_argument("hl_triple: prime table must cover x + 14");

  std::vector<int64_t> c_elems;
  for (int64_t n = 1; n <= x; ++n)
    if (table.is_prime(n + 2) && table.is_prime(n + 8) && table.is_prime(n + 14))
      c_elems.push_back(n);

  DecompositionWitness w;
  w.A = IntSet({1, 7}, 7);
  w.B = IntSet({1, 7}, 7);
  w.C = IntSet(std::move(c_elems), x);
  w.x = x;
  if (w.C.empty()) {
    w.verified = false;
    w.sumset_size = 0;
    return w;
  }
  verify_witness(w, table);
  return w;
}

namespace {

struct VectorHash {
  size_t operator()(const std::vector<int64_t>& v) const {
    uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (int64_t x : v) h = mix64(h ^ static_cast<uint64_t>(x));
    return static_cast<size_t>(h);
  }
};

void check_subset_budget(int64_t t_size, int64_t tau, int64_t budget) {
  if (binom_capped(t_size, tau) > budget)
    throw resource_limit_error(
        "est_extract: enumerating C(" + std::to_string(t_size) + ", " + std::to_string(tau) +
        ") subsets exceeds the budget of " + std::to_string(budget) + " steps (override with " +
        kBudgetEnvVar + ")");
}

// Anchors in T realizing the given difference pattern.
std::vector<int64_t> anchors_for(const IntSet& t, const std::vector<int64_t>& diffs) {
  std::vector<int64_t> anchors;
  for (int64_t a : t.elements()) {
    bool all = true;
    for (int64_t d : diffs)
      if (!t.contains(a + d)) {
        all = false;
        break;
      }
    if (all) anchors.push_back(a);
  }
  return anchors;
}

// Most popular gap among pairs, smallest gap winning ties.
int64_t best_gap(const IntSet& t) {
  const auto& el = t.elements();
  const int64_t range = el.back() - el.front();
  int64_t best_d = 0, best_count = 0;
  if (range <= (int64_t(1) << 24)) {
    std::vector<uint32_t> counts(static_cast<size_t>(range) + 1, 0);
    for (size_t i = 0; i < el.size(); ++i)
      for (size_t j = i + 1; j < el.size(); ++j) ++counts[static_cast<size_t>(el[j] - el[i])];
    for (int64_t d = 1; d <= range; ++d)
      if (counts[static_cast<size_t>(d)] > best_count) {
        best_count = counts[static_cast<size_t>(d)];
        best_d = d;
      }
  } else {
    std::unordered_map<int64_t, int64_t> counts;
    for (size_t i = 0; i < el.size(); ++i)
      for (size_t j = i + 1; j < el.size(); ++j) ++counts[el[j] - el[i]];
    for (const auto& [d, count] : counts)
      if (count > best_count || (count == best_count && d < best_d)) {
        best_count = count;
        best_d = d;
      }
  }
  return best_d;
}

// Most popular difference tuple among tau-subsets, tau >= 3;
// lexicographically smallest tuple wins ties.
std::vector<int64_t> best_tuple(const IntSet& t, int64_t tau) {
  const auto& el = t.elements();
  std::unordered_map<std::vector<int64_t>, int64_t, VectorHash> counts;
  std::vector<size_t> idx(static_cast<size_t>(tau));
  std::vector<int64_t> diffs(static_cast<size_t>(tau) - 1);

  auto recurse = [&](auto&& self, size_t depth) -> void {
    if (depth == idx.size()) {
      ++counts[diffs];
      return;
    }
    for (size_t i = idx[depth - 1] + 1; i + (idx.size() - depth - 1) < el.size(); ++i) {
      idx[depth] = i;
      diffs[depth - 1] = el[i] - el[idx[0]];
      self(self, depth + 1);
    }
  };
  for (size_t first = 0; first + idx.size() - 1 < el.size(); ++first) {
    idx[0] = first;
    recurse(recurse, 1);
  }

  const std::vector<int64_t>* best = nullptr;
  int64_t best_count = 0;
  for (const auto& [tuple, count] : counts)
    if (count > best_count || (count == best_count && tuple < *best)) {
      best_count = count;
      best = &tuple;
    }
  return *best;
}

}  // namespace

EstExtraction est_extract(const IntSet& t, int64_t x, int64_t tau, int64_t budget) {
  if (t.empty()) throw std::invalid_argument("est_extract: empty source set");
  if (tau < 1) throw std::invalid_argument("est_extract: requires tau >= 1");
  if (t.size() < tau)
    throw std::invalid_argument("est_extract: |T| = " + std::to_string(t.size()) +
                                " is below tau = " + std::to_string(tau));
  if (t.max() > x) throw std::invalid_argument("est_extract: T must lie in [1, x]");

  EstExtraction out;
  out.guarantee = ceil_div_positive(binom_capped(t.size(), tau), binom_capped(x - 1, tau - 1));

  if (tau == 1) {
    out.A.shifts = {0};
    out.S = t;
    return out;
  }

  check_subset_budget(t.size(), tau, budget);

  std::vector<int64_t> diffs;
  if (tau == 2)
    diffs = {best_gap(t)};
  else
    diffs = best_tuple(t, tau);

  out.A.shifts.assign(1, 0);
  out.A.shifts.insert(out.A.shifts.end(), diffs.begin(), diffs.end());
  out.S = IntSet(anchors_for(t, diffs), t.bound());
  if (out.S.size() < out.guarantee)
    throw internal_error("est_extract: anchor count below the pigeonhole guarantee");
  return out;
}

DecompositionWitness est_double_extract(const IntSet& t, int64_t x, int64_t kappa1,
                                        int64_t kappa2, int64_t budget) {
  if (kappa1 < 1 || kappa2 < 1)
    throw std::invalid_argument("est_double_extract: requires kappa1, kappa2 >= 1");

  const EstExtraction first = est_extract(t, x, kappa1, budget);
  if (first.S.size() < kappa2)
    throw extraction_failed("est_double_extract: first anchor set has " +
                            std::to_string(first.S.size()) + " elements, fewer than kappa2 = " +
                            std::to_string(kappa2));
  const EstExtraction second = est_extract(first.S, x, kappa2, budget);

  // The two patterns contain 0; shift A and B up by one each and the anchor
  // set down by two so every set is positive while A+B+C is unchanged.
  if (second.S.min() < 3)
    throw extraction_failed(
        "est_double_extract: second anchor set starts at " + std::to_string(second.S.min()) +
        "; a sumset containing values below 3 has no positive triple decomposition");

  auto shifted = [](const std::vector<int64_t>& shifts) {
    std::vector<int64_t> v = shifts;
    for (int64_t& s : v) s += 1;
    const int64_t bound = *std::max_element(v.begin(), v.end());
    return IntSet(std::move(v), bound);
  };

  DecompositionWitness w;
  w.A = shifted(first.A.shifts);
  w.B = shifted(second.A.shifts);
  w.C = translate(second.S, -2);
  w.x = x;

  const IntSet parts[] = {w.A, w.B, w.C};
  const IntSet sum = k_fold_sumset(parts);
  for (int64_t n : sum.elements())
    if (!t.contains(n))
      throw internal_error("est_double_extract: sumset element " + std::to_string(n) +
                           " escaped the source set");
  w.sumset_size = sum.size();
  if (x >= 3) w.target_bound = theorem2_bound(x, kappa1, kappa2);
  w.verified = false;  // primality is a separate concern; see verify_witness
  return w;
}

double theorem2_bound(int64_t x, int64_t kappa1, int64_t kappa2) {
  if (x < 3) throw std::invalid_argument("theorem2_bound: requires x >= 3");
  if (kappa1 < 1 || kappa2 < 1)
    throw std::invalid_argument("theorem2_bound: requires kappa1, kappa2 >= 1");
  const double lx = std::log(static_cast<double>(x));
  return static_cast<double>(x) /
         (static_cast<double>(kappa2) *
          std::pow(static_cast<double>(kappa1), static_cast<double>(kappa2)) *
          std::pow(lx, static_cast<double>(kappa1 * kappa2)));
}

bool verify_witness(DecompositionWitness& w, const PrimeTable& table) {
  if (w.A.empty() || w.B.empty() || w.C.empty())
    throw std::invalid_argument("verify_witness: witness sets must be non-empty");
  if (table.limit() < w.A.max() + w.B.max() + w.C.max())
    throw std::invalid_argument("verify_witness: prime table too small for max(A)+max(B)+max(C)");
  const IntSet parts[] = {w.A, w.B, w.C};
  const IntSet sum = k_fold_sumset(parts);
  w.sumset_size = sum.size();
  w.verified = std::all_of(sum.elements().begin(), sum.elements().end(),
                           [&](int64_t n) { return table.is_prime(n); });
  return w.verified;
}

}  // namespace trisum
