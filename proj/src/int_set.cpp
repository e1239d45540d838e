#include "trisum/int_set.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trisum {

IntSet::IntSet(std::vector<int64_t> elements, int64_t bound)
    : elems_(std::move(elements)), bound_(bound) {
  if (bound_ < 0) throw std::invalid_argument("IntSet: bound must be non-negative");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty()) {
    if (elems_.front() < 1) throw std::invalid_argument("IntSet: elements must be positive");
    if (elems_.back() > bound_) throw std::invalid_argument("IntSet: element exceeds bound");
  }
}

IntSet IntSet::range(int64_t lo, int64_t hi) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("IntSet::range: need 1 <= lo <= hi");
  std::vector<int64_t> v(static_cast<size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return IntSet(std::move(v), hi);
}

int64_t IntSet::min() const {
  if (elems_.empty()) throw std::invalid_argument("IntSet::min: empty set");
  return elems_.front();
}

int64_t IntSet::max() const {
  if (elems_.empty()) throw std::invalid_argument("IntSet::max: empty set");
  return elems_.back();
}

bool IntSet::contains(int64_t v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

int64_t IntSet::count_leq(int64_t x) const {
  return static_cast<int64_t>(std::upper_bound(elems_.begin(), elems_.end(), x) -
                              elems_.begin());
}

namespace {

void require_nonempty(const IntSet& s, const char* op) {
  if (s.empty()) throw std::invalid_argument(std::string(op) + ": empty input set");
}

}  // namespace

IntSet sumset_merge(const IntSet& a, const IntSet& b) {
  require_nonempty(a, "sumset");
  require_nonempty(b, "sumset");
  std::vector<int64_t> sums;
  sums.reserve(static_cast<size_t>(a.size() * b.size()));
  for (int64_t x : a.elements())
    for (int64_t y : b.elements()) sums.push_back(x + y);
  return IntSet(std::move(sums), a.bound() + b.bound());
}

IntSet sumset_bitset(const IntSet& a, const IntSet& b) {
  require_nonempty(a, "sumset");
  require_nonempty(b, "sumset");
  const int64_t max_sum = a.max() + b.max();
  const size_t acc_words = static_cast<size_t>(max_sum >> 6) + 2;
  const size_t b_words = static_cast<size_t>(b.max() >> 6) + 1;
  std::vector<uint64_t> acc(acc_words, 0);
  std::vector<uint64_t> bbits(b_words, 0);
  for (int64_t y : b.elements())
    bbits[static_cast<size_t>(y >> 6)] |= uint64_t(1) << (y & 63);
  for (int64_t x : a.elements()) {
    const size_t word = static_cast<size_t>(x >> 6);
    const int shift = static_cast<int>(x & 63);
    if (shift == 0) {
      for (size_t i = 0; i < b_words; ++i) acc[i + word] |= bbits[i];
    } else {
      for (size_t i = 0; i < b_words; ++i) {
        acc[i + word] |= bbits[i] << shift;
        acc[i + word + 1] |= bbits[i] >> (64 - shift);
      }
    }
  }
  std::vector<int64_t> sums;
  for (size_t w = 0; w < acc_words; ++w) {
    uint64_t bitsword = acc[w];
    while (bitsword != 0) {
      const int bit = std::countr_zero(bitsword);
      sums.push_back(static_cast<int64_t>(w) * 64 + bit);
      bitsword &= bitsword - 1;
    }
  }
  return IntSet(std::move(sums), a.bound() + b.bound());
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  require_nonempty(a, "sumset");
  require_nonempty(b, "sumset");
  if (a.size() * b.size() <= kSumsetMergeMaxProduct) return sumset_merge(a, b);
  return sumset_bitset(a, b);
}

IntSet k_fold_sumset(std::span<const IntSet> sets) {
  if (sets.empty()) throw std::invalid_argument("k_fold_sumset: need at least one set");
  IntSet acc = sets.front();
  require_nonempty(acc, "k_fold_sumset");
  for (size_t i = 1; i < sets.size(); ++i) acc = sumset(acc, sets[i]);
  return acc;
}

int64_t counting_function(const IntSet& s, int64_t x) { return s.count_leq(x); }

IntSet translate(const IntSet& j, int64_t t) {
  require_nonempty(j, "translate");
  if (j.min() + t < 1)
    throw std::invalid_argument("translate: shift would produce a non-positive element");
  std::vector<int64_t> shifted;
  shifted.reserve(static_cast<size_t>(j.size()));
  for (int64_t e : j.elements()) shifted.push_back(e + t);
  return IntSet(std::move(shifted), j.bound() + t);
}

ResidueProfile residue_profile(const IntSet& j, int64_t q) {
  if (q < 2) throw std::invalid_argument("residue_profile: modulus must be >= 2");
  ResidueProfile profile;
  profile.modulus = q;
  profile.class_counts.assign(static_cast<size_t>(q), 0);
  for (int64_t e : j.elements()) ++profile.class_counts[static_cast<size_t>(e % q)];
  for (int64_t r = 0; r < q; ++r)
    if (profile.class_counts[static_cast<size_t>(r)] > 0) profile.occupied.push_back(r);
  return profile;
}

std::vector<int64_t> occupied_classes(const IntSet& j, int64_t q) {
  if (q < 2) throw std::invalid_argument("occupied_classes: modulus must be >= 2");
  std::vector<uint8_t> seen(static_cast<size_t>(q), 0);
  for (int64_t e : j.elements()) seen[static_cast<size_t>(e % q)] = 1;
  std::vector<int64_t> out;
  for (int64_t r = 0; r < q; ++r)
    if (seen[static_cast<size_t>(r)]) out.push_back(r);
  return out;
}

int64_t occupancy_difference(const IntSet& j, const IntSet& k, int64_t p) {
  if (p < 2) throw std::invalid_argument("occupancy_difference: modulus must be >= 2");
  std::vector<uint8_t> in_j(static_cast<size_t>(p), 0), in_k(static_cast<size_t>(p), 0);
  for (int64_t e : j.elements()) in_j[static_cast<size_t>(e % p)] = 1;
  for (int64_t e : k.elements()) in_k[static_cast<size_t>(e % p)] = 1;
  int64_t diff = 0;
  for (int64_t r = 0; r < p; ++r)
    diff += (in_j[static_cast<size_t>(r)] && !in_k[static_cast<size_t>(r)]) ? 1 : 0;
  return diff;
}

}  // namespace trisum
