#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace trisum {

// Sorted set of distinct positive integers together with the universe
// bound it lives in.  The single carrier for every set this project
// manipulates.  Immutable after construction.
class IntSet {
 public:
  IntSet() = default;  // empty set, bound 0

  // Sorts and deduplicates; every element must satisfy 1 <= e <= bound.
  IntSet(std::vector<int64_t> elements, int64_t bound);

  // {lo, lo+1, ..., hi} with bound hi.
  static IntSet range(int64_t lo, int64_t hi);

  const std::vector<int64_t>& elements() const noexcept { return elems_; }
  int64_t bound() const noexcept { return bound_; }
  int64_t size() const noexcept { return static_cast<int64_t>(elems_.size()); }
  bool empty() const noexcept { return elems_.empty(); }

  int64_t min() const;  // throws on empty
  int64_t max() const;  // throws on empty

  bool contains(int64_t v) const;

  // Counting function: |{s in S : s <= x}|, O(log |S|).
  int64_t count_leq(int64_t x) const;

  bool operator==(const IntSet& other) const {
    return elems_ == other.elems_ && bound_ == other.bound_;
  }

 private:
  std::vector<int64_t> elems_;
  int64_t bound_ = 0;
};

// Per-modulus occupancy: class counts |J(r,q)|, the occupied class set J_q
// and h = |J_q|.
struct ResidueProfile {
  int64_t modulus = 0;
  std::vector<int64_t> class_counts;  // size modulus
  std::vector<int64_t> occupied;      // sorted classes with positive count
  int64_t h() const { return static_cast<int64_t>(occupied.size()); }
};

// Sumsets switch between a sorted-merge path and a shifted-bitset path at
// this |A|*|B| threshold; the two paths are tested to agree.
inline constexpr int64_t kSumsetMergeMaxProduct = 4096;

IntSet sumset(const IntSet& a, const IntSet& b);
IntSet sumset_merge(const IntSet& a, const IntSet& b);
IntSet sumset_bitset(const IntSet& a, const IntSet& b);

// Left fold of sumset over one or more non-empty sets.
IntSet k_fold_sumset(std::span<const IntSet> sets);

int64_t counting_function(const IntSet& s, int64_t x);

// Order-preserving shift; requires t + min(J) >= 1.
IntSet translate(const IntSet& j, int64_t t);

ResidueProfile residue_profile(const IntSet& j, int64_t q);

// Sorted residue classes mod q occupied by J (profile without counts).
std::vector<int64_t> occupied_classes(const IntSet& j, int64_t q);

// |J_p \ K_p|: classes occupied by J but not by K, modulo p.
int64_t occupancy_difference(const IntSet& j, const IntSet& k, int64_t p);

}  // namespace trisum
